//! Alexander polynomials from graded Euler characteristics.

use super::complex::GridComplex;
use crate::f2::{poincare, F2Error, LaurentPoly, LaurentPoly2};

/// 1 − t⁻¹
fn one_minus_inv_t() -> LaurentPoly {
    LaurentPoly::from_terms(&[(0, 1), (-2, -1)])
}

/// t^½ − t^−½
fn half_binomial() -> LaurentPoly {
    LaurentPoly::from_terms(&[(1, 1), (-1, -1)])
}

/// χ of the tilde homology divided by the factors coming from extra
/// basepoints and extra components. Knots are normalized to Δ(1) = 1;
/// links and singular knots keep the sign of the Euler characteristic.
pub fn alexander_from_poincare(
    p: &LaurentPoly2,
    n: usize,
    components: usize,
    singular: bool,
) -> Result<LaurentPoly, F2Error> {
    let chi = p.euler();
    let divisor = if singular {
        one_minus_inv_t().pow(n as u32 - 1)
    } else {
        &one_minus_inv_t().pow((n - components) as u32) * &half_binomial().pow(components as u32 - 1)
    };
    let delta = chi.div_exact(&divisor)?;
    if !singular && components == 1 && delta.at_one() == -1 {
        Ok(delta.scale(-1))
    } else {
        Ok(delta)
    }
}

impl GridComplex {
    pub fn alexander_polynomial(&self) -> Result<LaurentPoly, F2Error> {
        let p = poincare(&self.homology().ranks);
        alexander_from_poincare(&p, self.grid.n(), self.grid.components(), self.grid.is_singular())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{GridDiagram, Limits};

    #[test]
    fn unknot_is_one() {
        let g = GridDiagram::new(2, vec![(1, 2), (2, 1)], vec![(1, 1), (2, 2)], None).unwrap();
        let c = GridComplex::build(&g, &Limits::default()).unwrap();
        assert_eq!(c.alexander_polynomial().unwrap(), LaurentPoly::one());
    }

    #[test]
    fn non_divisible_is_reported() {
        let p = LaurentPoly2::monomial(0, 0, 1);
        assert!(alexander_from_poincare(&p, 3, 1, false).is_err());
    }
}
