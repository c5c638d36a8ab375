use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// `f(k) = components[k mod period](k)`; each component is a coefficient list,
/// constant term first. The zero polynomial is the empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    components: Vec<Vec<Rational>>,
}

impl QuasiPolynomial {
    pub fn new(components: Vec<Vec<Rational>>) -> Result<QuasiPolynomial> {
        if components.is_empty() {
            return Err(Error::Dimension("quasi-polynomial needs a positive period".into()));
        }
        Ok(QuasiPolynomial {
            components: components.into_iter().map(trim).collect(),
        })
    }

    pub fn period(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<Rational>] {
        &self.components
    }

    /// Largest component degree; `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.components.iter().filter_map(|c| c.len().checked_sub(1)).max()
    }

    pub fn eval(&self, k: i64) -> Rational {
        let comp = &self.components[k.rem_euclid(self.period() as i64) as usize];
        eval_poly(comp, &Rational::from_integer(k.into()))
    }
}

fn trim(mut c: Vec<Rational>) -> Vec<Rational> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    c
}

fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

#[derive(Serialize, Deserialize)]
struct QuasiPolynomialJson {
    period: usize,
    components: Vec<Vec<String>>,
}

impl Serialize for QuasiPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuasiPolynomialJson {
            period: self.period(),
            components: self
                .components
                .iter()
                .map(|c| c.iter().map(rational::format).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuasiPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = QuasiPolynomialJson::deserialize(d)?;
        if raw.period != raw.components.len() {
            return Err(D::Error::custom("period does not match component count"));
        }
        let comps = raw
            .components
            .iter()
            .map(|c| c.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        QuasiPolynomial::new(comps).map_err(D::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FitOptions {
    pub max_period: usize,
    pub max_degree: usize,
    /// Trailing values held out of the interpolation and used only to verify.
    pub holdout: usize,
    /// Leading values discarded (for counting functions that are only
    /// eventually quasi-polynomial).
    pub skip_prefix: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            max_period: 4,
            max_degree: 6,
            holdout: 2,
            skip_prefix: 0,
        }
    }
}

/// Fits `values[i] = f(i + 1)`. Periods are tried in increasing order; for
/// each, every residue class is interpolated through all of its non-holdout
/// points and the result must reproduce the holdout values exactly.
pub fn fit_quasipolynomial(values: &[i64], opts: FitOptions) -> Result<QuasiPolynomial> {
    if opts.holdout == 0 || opts.max_period == 0 {
        return Err(Error::Dimension("holdout and max_period must be positive".into()));
    }
    let points: Vec<(i64, Rational)> = values
        .iter()
        .enumerate()
        .skip(opts.skip_prefix)
        .map(|(i, &v)| (i as i64 + 1, Rational::from_integer(v.into())))
        .collect();
    if points.len() <= opts.holdout {
        return Err(Error::NotQuasiPolynomial);
    }
    let (fit, hold) = points.split_at(points.len() - opts.holdout);

    'period: for l in 1..=opts.max_period {
        let mut comps = Vec::with_capacity(l);
        for r in 0..l as i64 {
            let class: Vec<&(i64, Rational)> = fit.iter().filter(|(k, _)| k.rem_euclid(l as i64) == r).collect();
            if class.is_empty() {
                continue 'period;
            }
            let poly = trim(interpolate(&class));
            if poly.len() > opts.max_degree + 1 {
                continue 'period;
            }
            comps.push(poly);
        }
        let qp = QuasiPolynomial { components: comps };
        if hold.iter().all(|(k, v)| qp.eval(*k) == *v) {
            return Ok(qp);
        }
    }
    Err(Error::NotQuasiPolynomial)
}

/// Coefficients (constant first) of the interpolating polynomial, via Newton
/// divided differences.
fn interpolate(points: &[&(i64, Rational)]) -> Vec<Rational> {
    let xs: Vec<Rational> = points.iter().map(|(k, _)| Rational::from_integer((*k).into())).collect();
    let mut dd: Vec<Rational> = points.iter().map(|(_, v)| v.clone()).collect();
    let n = dd.len();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form
    let mut coeffs = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        // coeffs ← coeffs·(x − xs[i]) + dd[i]
        let mut next = vec![Rational::zero(); n];
        for (d, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d + 1 < n {
                next[d + 1] += c;
            }
            next[d] -= c * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn opts(max_period: usize, max_degree: usize, holdout: usize) -> FitOptions {
        FitOptions {
            max_period,
            max_degree,
            holdout,
            skip_prefix: 0,
        }
    }

    #[test]
    fn square_sequence() {
        let v: Vec<i64> = (1..=8).map(|k| (k + 1) * (k + 1)).collect();
        let qp = fit_quasipolynomial(&v, opts(4, 6, 2)).unwrap();
        assert_eq!(qp.period(), 1);
        assert_eq!(qp.components()[0], vec![int(1), int(2), int(1)]);
    }

    #[test]
    fn half_interval_has_period_two() {
        let v: Vec<i64> = (1..=10).map(|k| k / 2 + 1).collect();
        let qp = fit_quasipolynomial(&v, opts(4, 6, 2)).unwrap();
        assert_eq!(qp.period(), 2);
        // even k: (k+2)/2, odd k: (k+1)/2
        assert_eq!(qp.components()[0], vec![int(1), frac(1, 2)]);
        assert_eq!(qp.components()[1], vec![frac(1, 2), frac(1, 2)]);
        for k in 1..=10 {
            assert_eq!(qp.eval(k), int(k / 2 + 1));
        }
    }

    #[test]
    fn geometric_is_rejected() {
        assert_eq!(fit_quasipolynomial(&[1, 2, 4, 8], opts(4, 6, 1)), Err(Error::NotQuasiPolynomial));
        assert_eq!(fit_quasipolynomial(&[1, 2, 4, 8], opts(2, 6, 2)), Err(Error::NotQuasiPolynomial));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let v: Vec<i64> = (1..=8).map(|k| k * k * k).collect();
        assert!(fit_quasipolynomial(&v, opts(1, 2, 2)).is_err());
        assert!(fit_quasipolynomial(&v, opts(1, 3, 2)).is_ok());
    }

    #[test]
    fn zero_series_fits_zero_polynomial() {
        let qp = fit_quasipolynomial(&[0; 6], FitOptions::default()).unwrap();
        assert_eq!(qp.period(), 1);
        assert!(qp.components()[0].is_empty());
        assert_eq!(qp.degree(), None);
    }

    #[test]
    fn skip_prefix_handles_eventual_behaviour() {
        // 5, then k for k ≥ 2
        let v = [5, 2, 3, 4, 5, 6];
        assert!(fit_quasipolynomial(&v, opts(1, 1, 2)).is_err());
        let qp = fit_quasipolynomial(&v, FitOptions { skip_prefix: 1, ..opts(1, 1, 2) }).unwrap();
        assert_eq!(qp.components()[0], vec![int(0), int(1)]);
    }

    #[test]
    fn json_shape() {
        let qp = QuasiPolynomial::new(vec![vec![int(1), frac(1, 2)], vec![frac(1, 2), frac(1, 2)]]).unwrap();
        let s = serde_json::to_string(&qp).unwrap();
        assert_eq!(s, r#"{"period":2,"components":[["1","1/2"],["1/2","1/2"]]}"#);
        let back: QuasiPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, qp);
        assert!(serde_json::from_str::<QuasiPolynomial>(r#"{"period":3,"components":[["1"]]}"#).is_err());
    }
}
