use num_traits::Zero;

use super::{CatalogEntry, ConstantExpr, Oracle, Status};
use crate::cf::{CFSpec, PolynomialQ, Term, TermFormula, TermRule};
use crate::generate::{SeriesSpec, SignedQuotient};
use crate::numerics::{int, rat, Rational};

use super::Base::{E, Pi};

fn poly(c: &[i64]) -> PolynomialQ {
    PolynomialQ::from_ints(c)
}

fn formula(a: &[i64], b: &[i64]) -> TermFormula {
    TermFormula::polynomial(poly(a), poly(b))
}

fn polynomial_rule(a: &[i64], b: &[i64]) -> TermRule {
    TermRule::Polynomial(formula(a, b))
}

fn hybrid(prefix: &[(i64, i64)], tail: TermRule) -> TermRule {
    let prefix = prefix.iter().map(|&(a, b)| Term::ints(a, b)).collect();
    TermRule::hybrid(prefix, tail).expect("catalog tails are closed-form")
}

fn entry(
    name: &str,
    b0: i64,
    rule: TermRule,
    target: ConstantExpr,
    status: Status,
    summary: &str,
) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        spec: CFSpec::named(name, int(b0), rule),
        target,
        status,
        oracle: None,
        summary: summary.to_string(),
        errata: Vec::new(),
    }
}

impl CatalogEntry {
    fn with_oracle(mut self, oracle: Oracle) -> Self {
        self.oracle = Some(oracle);
        self
    }

    fn erratum(mut self, note: &str) -> Self {
        self.errata.push(note.to_string());
        self
    }
}

fn target(base: super::Base, scale: Rational, offset: Rational) -> ConstantExpr {
    ConstantExpr { base, scale, offset }
}

/// `(pi + 2)/2` family in the block index `m` of a period-2 rule:
/// slot 1 is `n = 2m - 1`, slot 2 is `n = 2m`.
fn pi_plus_two_sign_flipped(b_sign: i64) -> TermRule {
    TermRule::Interleaved(vec![
        formula(&[0, -6, 8], &[0, 6 * b_sign]),
        formula(&[-1, 2, 8], &[-3 * b_sign, -6 * b_sign]),
    ])
}

pub(super) fn build() -> Vec<CatalogEntry> {
    let theorem = Status::Theorem;
    let conjecture = Status::Conjecture;
    let classical = Status::Classical;
    let half_e = target(E, rat(1, 2), Rational::zero());
    let e_minus_two = target(E, int(1), int(-2));
    let pi_half_plus_one = target(Pi, rat(1, 2), int(1));
    let neg_pi_half_plus_one = target(Pi, rat(-1, 2), int(-1));

    // e - 2: a = -1, m + 1 alternately; b = 1.
    let e_minus_two_rule = TermRule::Interleaved(vec![formula(&[-1], &[1]), formula(&[1, 1], &[1])]);
    // -(pi + 2)/2: a_n = -(n + 1)(2n - 1), b_n = -3(n + 1).
    let pi_form1_rule = polynomial_rule(&[1, -1, -2], &[-3, -3]);
    let pi_form2_rule = polynomial_rule(&[1, -1, -2], &[3, 3]);

    vec![
        entry(
            "e_half",
            1,
            hybrid(&[(1, 2)], polynomial_rule(&[1, 1], &[1, 1])),
            half_e.clone(),
            theorem,
            "e/2 = 1 + 1/2 + 3/3 + 4/4 + 5/5 + ...",
        )
        .with_oracle(Oracle::EHalf)
        .erratum(
            "The published proof says a_n = n+1 for n >= 1, but the expansion it proves \
             has a_1 = 1; the expansion is encoded.",
        ),
        entry(
            "e_minus_2",
            1,
            e_minus_two_rule.clone(),
            e_minus_two.clone(),
            theorem,
            "e - 2 = 1 + (-1)/1 + 2/1 + (-1)/1 + 3/1 + (-1)/1 + 4/1 + ...",
        )
        .with_oracle(Oracle::EMinusTwo)
        .erratum(
            "The published odd-index closed forms A_(2n-1), B_(2n-1) use n! and D(n); the \
             recurrence values need (n+1)! and D(n+1). The even-index forms are as published.",
        ),
        entry(
            "lu_wei_e",
            3,
            polynomial_rule(&[0, -1], &[3, 1]),
            target(E, int(1), Rational::zero()),
            theorem,
            "e = 3 + (-1)/4 + (-2)/5 + (-3)/6 + ...",
        ),
        entry(
            "minus_e",
            -3,
            polynomial_rule(&[0, -1], &[-3, -1]),
            target(E, int(-1), Rational::zero()),
            theorem,
            "-e = -3 + (-1)/(-4) + (-2)/(-5) + (-3)/(-6) + ..., the negation of lu_wei_e",
        ),
        entry(
            "minus_e_half",
            -1,
            hybrid(&[(1, -2)], polynomial_rule(&[1, 1], &[-1, -1])),
            target(E, rat(-1, 2), Rational::zero()),
            theorem,
            "-e/2 = -1 + 1/(-2) + 3/(-3) + 4/(-4) + ..., the negation of e_half",
        )
        .erratum(
            "Published with a first partial numerator of 2; that expansion converges to \
             1 - e (see minus_e_half_printed). Negating e_half keeps a_1 = 1.",
        ),
        entry(
            "minus_e_half_printed",
            -1,
            polynomial_rule(&[1, 1], &[-1, -1]),
            target(E, rat(-1, 2), Rational::zero()),
            conjecture,
            "-1 + 2/(-2) + 3/(-3) + 4/(-4) + ... as published for -e/2",
        )
        .erratum("Converges to 1 - e, not -e/2. Kept to demonstrate the discrepancy."),
        entry(
            "two_minus_e",
            -1,
            TermRule::Interleaved(vec![formula(&[-1], &[-1]), formula(&[1, 1], &[-1])]),
            target(E, int(-1), int(2)),
            theorem,
            "2 - e = -1 + (-1)/(-1) + 2/(-1) + (-1)/(-1) + 3/(-1) + ..., the negation of e_minus_2",
        ),
        entry(
            "e_minus_2_alt",
            1,
            TermRule::Interleaved(vec![formula(&[1], &[-1]), formula(&[-1, -1], &[1])]),
            e_minus_two,
            theorem,
            "e - 2 = 1 + 1/(-1) + (-2)/1 + 1/(-1) + (-3)/1 + ..., the sign flip of e_minus_2",
        ),
        entry(
            "pi_plus_2_half_form1",
            -3,
            pi_form1_rule,
            neg_pi_half_plus_one.clone(),
            conjecture,
            "-(pi+2)/2 = -3 + (-2*1)/(-3*2) + (-3*3)/(-3*3) + (-4*5)/(-3*4) + ...",
        ),
        entry(
            "pi_plus_2_half_form2",
            3,
            pi_form2_rule.clone(),
            pi_half_plus_one.clone(),
            conjecture,
            "(pi+2)/2 = 3 + (-2*1)/(3*2) + (-3*3)/(3*3) + (-4*5)/(3*4) + ..., the negation of form 1",
        )
        .erratum("Published with a_2 = +3*3; the negation of form 1 has a_2 = -3*3."),
        entry(
            "pi_plus_2_half_form2_printed",
            3,
            hybrid(&[(-2, 6), (9, 9)], pi_form2_rule),
            pi_half_plus_one.clone(),
            conjecture,
            "3 + (-2*1)/(3*2) + (3*3)/(3*3) + (-4*5)/(3*4) + ... as published for (pi+2)/2",
        )
        .erratum("The a_2 sign makes this converge to about 2.7269, not (pi+2)/2 = 2.5707..."),
        entry(
            "pi_plus_2_half_form3",
            -3,
            pi_plus_two_sign_flipped(1),
            neg_pi_half_plus_one,
            conjecture,
            "-(pi+2)/2 = -3 + (2*1)/(3*2) + (3*3)/(-3*3) + (4*5)/(3*4) + ..., the sign flip of form 1",
        ),
        entry(
            "pi_plus_2_half_form4",
            3,
            pi_plus_two_sign_flipped(-1),
            pi_half_plus_one.clone(),
            conjecture,
            "(pi+2)/2 = 3 + (2*1)/(-3*2) + (3*3)/(3*3) + (4*5)/(-3*4) + ..., the negated sign flip of form 1",
        )
        .erratum("Published with a_2 = -3*3; the negated sign flip of form 1 has a_2 = +3*3."),
        entry(
            "pi_plus_2_half_form4_printed",
            3,
            hybrid(&[(2, -6), (-9, 9)], pi_plus_two_sign_flipped(-1)),
            pi_half_plus_one,
            conjecture,
            "3 + (2*1)/(-3*2) + (-3*3)/(3*3) + (4*5)/(-3*4) + ... as published for (pi+2)/2",
        )
        .erratum("Same a_2 sign discrepancy as pi_plus_2_half_form2_printed."),
        entry(
            "brouncker_pi_4",
            0,
            hybrid(&[(1, 1)], polynomial_rule(&[9, -12, 4], &[2])),
            target(Pi, rat(1, 4), Rational::zero()),
            classical,
            "pi/4 = 1/1 + 1^2/2 + 3^2/2 + 5^2/2 + ...",
        ),
        entry(
            "lange_pi_minus_3_4",
            0,
            hybrid(&[(1, 24), (36, 6)], polynomial_rule(&[1, -4, 4], &[6])),
            target(Pi, rat(1, 4), rat(-3, 4)),
            classical,
            "(pi-3)/4 = 1/24 + 36/6 + 5^2/6 + 7^2/6 + 9^2/6 + ...",
        ),
        entry(
            "pi_thirds",
            0,
            hybrid(&[(-6, -5)], pi_thirds_tail()),
            target(Pi, rat(1, 3), Rational::zero()),
            theorem,
            "pi/3 = (-6)/(-5) + (-75)/62 + 29645/278 + a_n/b_n + ..., \
             a_n = (2n-1)(2n-5)(6n-11)^2(6n-7)^2, b_n = 2(36n^2-72n+31)",
        )
        .erratum(
            "Published with b_2 = 63; the tail formula gives 62 at n = 2 and the partial-sum \
             identity confirms 62.",
        )
        .erratum(
            "The published generator lists a_1 = 6/5; the series construction requires \
             a_1 = 2 c_1 = 12/5. Clearing gives the head (6, 5), (75, 62); the encoded \
             (-6, -5), (-75, 62) follows from one more scalar c_1 = -1.",
        ),
        entry(
            "pi_thirds_printed",
            0,
            hybrid(&[(-6, -5), (-75, 63)], pi_thirds_tail()),
            target(Pi, rat(1, 3), Rational::zero()),
            conjecture,
            "pi/3 expansion as published, with b_2 = 63",
        )
        .erratum("b_2 = 63 breaks the partial-sum identity; see pi_thirds."),
    ]
}

/// `a_n = (2n-1)(2n-5)(6n-11)^2(6n-7)^2`, `b_n = 2(36n^2 - 72n + 31)`.
fn pi_thirds_tail() -> TermRule {
    let a = [poly(&[-1, 2]), poly(&[-5, 2]), poly(&[-11, 6]), poly(&[-11, 6]), poly(&[-7, 6]), poly(&[-7, 6])]
        .iter()
        .fold(PolynomialQ::one(), |acc, f| &acc * f);
    TermRule::Polynomial(TermFormula::polynomial(a, poly(&[62, -144, 72])))
}

/// Series whose partial sums feed the series-to-fraction construction.
pub(super) fn series() -> Vec<(&'static str, SeriesSpec, ConstantExpr)> {
    let one = PolynomialQ::one;
    vec![
        (
            "leibniz",
            SeriesSpec::SignedPolyQuotient(SignedQuotient::new(one(), poly(&[-1, 2]), true)),
            target(Pi, rat(1, 4), Rational::zero()),
        ),
        (
            // 1 / (2k (2k+1) (2k+2))
            "lange",
            SeriesSpec::SignedPolyQuotient(SignedQuotient::new(one(), poly(&[0, 4, 12, 8]), true)),
            target(Pi, rat(1, 4), rat(-3, 4)),
        ),
        (
            // 1/(6k-5) + 1/(6k-1)
            "pi_thirds",
            SeriesSpec::SumOfSignedQuotients(vec![
                SignedQuotient::new(one(), poly(&[-5, 6]), true),
                SignedQuotient::new(one(), poly(&[-1, 6]), true),
            ]),
            target(Pi, rat(1, 3), Rational::zero()),
        ),
    ]
}
