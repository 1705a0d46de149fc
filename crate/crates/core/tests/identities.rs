//! Cross-module invariants at their full stated ranges; the cheaper
//! spot checks live as unit tests next to each module.

use rstirling::{
    bernoulli_at_integer, fubini_antiderivative, fubini_egf, fubini_poly, Rat,
};

#[test]
fn antiderivative_differentiates_back() {
    for n in 0..=25 {
        for r in 0..=8 {
            assert_eq!(
                &fubini_antiderivative(n, r).derivative(),
                fubini_poly(n, r).poly(),
                "n={n} r={r}"
            );
        }
    }
}

#[test]
fn antiderivative_at_minus_one_gives_bernoulli_values() {
    let minus_one = Rat::from(-1);
    for n in 0..=20 {
        for r in 0..=5 {
            let negated = -fubini_antiderivative(n, r).eval(&minus_one);
            assert_eq!(negated, bernoulli_at_integer(n, r), "n={n} r={r}");
        }
    }
}

#[test]
fn generating_series_agrees_with_polynomial_values() {
    let half = Rat::new(1.into(), 2.into()).unwrap();
    let points = [Rat::one(), Rat::from(-1), half, Rat::from(2)];
    for r in 0..=4 {
        for x in &points {
            let series = fubini_egf(x, r, 20);
            for n in 0..=20 {
                assert_eq!(
                    series.egf_coeff(n),
                    fubini_poly(n, r).eval(x),
                    "n={n} r={r} x={x}"
                );
            }
        }
    }
}
