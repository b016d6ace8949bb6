//! Rational points of ℙ¹ and ℙ², normalized so the first nonzero coordinate
//! is 1.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, Rational};
use crate::error::Error;
use crate::Result;

/// A point (t : s) of ℙ¹ over ℚ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjPoint1 {
    t: Rational,
    s: Rational,
}

impl ProjPoint1 {
    pub fn new(t: Rational, s: Rational) -> Result<Self> {
        if t.is_zero() && s.is_zero() {
            return Err(Error::ZeroPoint);
        }
        if !t.is_zero() {
            let s = s / &t;
            Ok(ProjPoint1 {
                t: Rational::one(),
                s,
            })
        } else {
            Ok(ProjPoint1 {
                t: Rational::zero(),
                s: Rational::one(),
            })
        }
    }

    /// The point (0 : 1), i.e. t = 0.
    pub fn zero_t() -> Self {
        ProjPoint1 {
            t: Rational::zero(),
            s: Rational::one(),
        }
    }

    /// The point (1 : 0), i.e. s = 0.
    pub fn infinity() -> Self {
        ProjPoint1 {
            t: Rational::one(),
            s: Rational::zero(),
        }
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn is_infinity(&self) -> bool {
        self.s.is_zero()
    }
}

impl std::fmt::Display for ProjPoint1 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({} : {})",
            format_rational(&self.t),
            format_rational(&self.s)
        )
    }
}

/// A point (x0 : x1 : x2) of ℙ² over ℚ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjPoint2 {
    coords: [Rational; 3],
}

impl ProjPoint2 {
    pub fn new(x0: Rational, x1: Rational, x2: Rational) -> Result<Self> {
        let mut coords = [x0, x1, x2];
        let pivot = coords.iter().position(|c| !c.is_zero());
        match pivot {
            None => Err(Error::ZeroPoint),
            Some(i) => {
                let scale = coords[i].clone();
                for c in coords.iter_mut() {
                    *c = c.clone() / &scale;
                }
                Ok(ProjPoint2 { coords })
            }
        }
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64) -> Result<Self> {
        use super::rational::rat_int;
        Self::new(rat_int(x0), rat_int(x1), rat_int(x2))
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }
}

impl std::fmt::Display for ProjPoint2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            format_rational(&self.coords[0]),
            format_rational(&self.coords[1]),
            format_rational(&self.coords[2])
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;

    #[test]
    fn normalization_first_nonzero_is_one() {
        let p = ProjPoint1::new(rat(2, 1), rat(4, 1)).unwrap();
        assert_eq!(p.t(), &rat(1, 1));
        assert_eq!(p.s(), &rat(2, 1));

        let q = ProjPoint1::new(rat(0, 1), rat(-5, 1)).unwrap();
        assert_eq!(q, ProjPoint1::zero_t());

        assert!(ProjPoint1::new(rat(0, 1), rat(0, 1)).is_err());
    }

    #[test]
    fn plane_point_normalization() {
        let p = ProjPoint2::from_ints(0, 3, 6).unwrap();
        assert_eq!(p.coords()[1], rat(1, 1));
        assert_eq!(p.coords()[2], rat(2, 1));
        assert!(ProjPoint2::from_ints(0, 0, 0).is_err());
    }
}
