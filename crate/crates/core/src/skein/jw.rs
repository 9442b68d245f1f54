//! Jones-Wenzl projectors, stored with a cleared denominator: `f_n = num / den`.

use std::sync::{Arc, Mutex, OnceLock};

use super::tl::TLElement;
use crate::error::Result;
use crate::laurent::{delta, LaurentPoly, LaurentRatio};

#[derive(Clone, Debug)]
pub struct Projector {
    pub n: usize,
    pub num: TLElement,
    pub den: LaurentPoly,
}

impl Projector {
    pub fn coeff(&self, m: &super::tl::Matching) -> LaurentRatio {
        LaurentRatio::new(self.num.coeff(m), self.den.clone())
    }

    /// `f_n f_n = f_n`, checked as `num · num = den · num`.
    pub fn is_idempotent(&self) -> Result<bool> {
        Ok(self.num.mul(&self.num)? == self.num.scale(&self.den))
    }

    /// `f_n e_i = 0 = e_i f_n` for every generator.
    pub fn is_annihilated(&self) -> Result<bool> {
        for i in 1..self.n {
            let e = TLElement::e(self.n, i);
            if !self.num.mul(&e)?.is_zero() || !e.mul(&self.num)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn closure(&self) -> LaurentRatio {
        LaurentRatio::new(self.num.closure(), self.den.clone())
    }
}

/// `f_n` via the one-sided recursion
/// `f_n = f_{n-1}⊗1 + Σ_{a=1}^{n-1} (-1)^{n-a} (Δ_{a-1}/Δ_{n-1}) (f_{n-1}⊗1) e_{n-1} e_{n-2} ... e_a`.
/// With `den_n = Δ_1 ... Δ_{n-1}` every step is division free. Cached.
pub fn jones_wenzl(n: usize) -> Arc<Projector> {
    assert!(n >= 1);
    static CACHE: OnceLock<Mutex<Vec<Arc<Projector>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        Mutex::new(vec![Arc::new(Projector {
            n: 1,
            num: TLElement::identity(1),
            den: LaurentPoly::one(),
        })])
    });
    let mut v = cache.lock().unwrap();
    while v.len() < n {
        let prev = v.last().unwrap().clone();
        let k = prev.n + 1;
        let lifted = prev.num.tensor_id();
        let mut num = lifted.scale(&delta(k as i64 - 1));
        let mut word = TLElement::identity(k);
        for a in (1..k).rev() {
            // word = e_{k-1} e_{k-2} ... e_a
            word = word.mul(&TLElement::e(k, a)).expect("same strand count");
            let term = lifted.mul(&word).expect("same strand count");
            let t = term.scale(&delta(a as i64 - 1));
            num = if (k - 1 - a).is_multiple_of(2) {
                num.sub(&t)
            } else {
                num.add(&t)
            }
            .expect("same strand count");
        }
        let den = &prev.den * &delta(k as i64 - 1);
        v.push(Arc::new(Projector { n: k, num, den }));
    }
    v[n - 1].clone()
}

/// `f_n` via the two-sided recursion
/// `f_n = f_{n-1}⊗1 - (Δ_{n-2}/Δ_{n-1}) (f_{n-1}⊗1) e_{n-1} (f_{n-1}⊗1)`, an
/// independent construction used to cross-check [`jones_wenzl`].
pub fn jones_wenzl_two_sided(n: usize) -> Projector {
    let mut p = Projector {
        n: 1,
        num: TLElement::identity(1),
        den: LaurentPoly::one(),
    };
    for k in 2..=n {
        let lifted = p.num.tensor_id();
        let e = TLElement::e(k, k - 1);
        let sandwich = lifted.mul(&e).unwrap().mul(&lifted).unwrap();
        let dk = delta(k as i64 - 1);
        let num = lifted
            .scale(&(&dk * &p.den))
            .sub(&sandwich.scale(&delta(k as i64 - 2)))
            .unwrap();
        let den = &(&p.den * &p.den) * &dk;
        p = Projector { n: k, num, den };
    }
    p
}
