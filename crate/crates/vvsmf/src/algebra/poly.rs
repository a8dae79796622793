//! Univariate polynomials over Q, coefficients stored lowest degree
//! first with the leading coefficient nonzero (unless zero).

use crate::{Int, Rat};
use rug::ops::Pow;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(Rat::from(1))
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// The monomial x.
    pub fn x() -> Self {
        QPoly {
            coeffs: vec![Rat::new(), Rat::from(1)],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    fn normalize(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if last.cmp0() == std::cmp::Ordering::Equal {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has degree 0 by convention here, use
    /// `is_zero` to distinguish it.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(|c| *c == 1u32) == Some(true)
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| Rat::from(-c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rat::new(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += Rat::from(a * b);
            }
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|a| Rat::from(a * c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> QPoly {
        let mut base = self.clone();
        let mut acc = QPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.is_zero() || self.degree() < divisor.degree() {
            return (QPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let lead = divisor.leading();
        let mut quot = vec![Rat::new(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            let q = Rat::from(&rem[i] / &lead);
            for j in 0..dd {
                let t = Rat::from(&q * &divisor.coeffs[j]);
                rem[i - dd + j] -= t;
            }
            rem[i] = Rat::new();
            quot[i - dd] = q;
        }
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &QPoly) -> QPoly {
        self.div_rem(divisor).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let lead = self.leading();
        self.scale(&Rat::from(lead.recip_ref()))
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| Rat::from(c * &Rat::from((i + 1) as u64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Evaluate at an arbitrary-precision float.
    pub fn eval_float(&self, x: &rug::Float) -> rug::Float {
        let prec = x.prec();
        let mut acc = rug::Float::new(prec);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += rug::Float::with_val(prec, c);
        }
        acc
    }

    /// Squarefree part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }

    /// Clear denominators and divide out the integer content; the
    /// result has coprime integer coefficients and positive leading
    /// coefficient. Returns the integer coefficients, lowest first.
    pub fn primitive_integer(&self) -> Vec<Int> {
        if self.is_zero() {
            return vec![];
        }
        let mut den = Int::from(1);
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| Int::from(c.numer() * Int::from(&den / c.denom())))
            .collect();
        let mut content = Int::new();
        for v in &ints {
            content = content.gcd(v);
        }
        if ints.last().unwrap().cmp0() == std::cmp::Ordering::Less {
            content = -content;
        }
        for v in &mut ints {
            *v /= &content;
        }
        ints
    }

    pub fn from_integers(ints: &[Int]) -> QPoly {
        QPoly::from_coeffs(ints.iter().map(|v| Rat::from(v)).collect())
    }

    /// Cauchy root bound: all complex roots have |z| < 1 + max|a_i/a_n|.
    pub fn root_bound(&self) -> Rat {
        let lead = self.leading();
        let mut m = Rat::new();
        for c in &self.coeffs[..self.coeffs.len().saturating_sub(1)] {
            let v = Rat::from(c / &lead).abs();
            if v > m {
                m = v;
            }
        }
        m + Rat::from(1)
    }

    /// Sturm sequence; used for exact real-root counting.
    pub fn sturm_sequence(&self) -> Vec<QPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]).neg();
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        seq
    }

    /// Number of distinct real roots in (lo, hi] via Sturm's theorem.
    pub fn count_real_roots(&self, seq: &[QPoly], lo: &Rat, hi: &Rat) -> usize {
        let sign_changes = |x: &Rat| {
            let mut changes = 0usize;
            let mut prev = 0i8;
            for p in seq {
                let v = p.eval(x);
                let s = match v.cmp0() {
                    std::cmp::Ordering::Less => -1i8,
                    std::cmp::Ordering::Equal => 0,
                    std::cmp::Ordering::Greater => 1,
                };
                if s != 0 {
                    if prev != 0 && s != prev {
                        changes += 1;
                    }
                    prev = s;
                }
            }
            changes
        };
        sign_changes(lo).saturating_sub(sign_changes(hi))
    }

    /// Isolate all real roots into disjoint rational intervals (lo, hi]
    /// each containing exactly one root.
    pub fn isolate_real_roots(&self) -> Vec<(Rat, Rat)> {
        let sf = self.squarefree_part();
        if sf.degree() == 0 {
            return vec![];
        }
        let seq = sf.sturm_sequence();
        let bound = sf.root_bound();
        let lo = Rat::from(-bound.clone());
        let mut stack = vec![(lo, bound)];
        let mut out = vec![];
        while let Some((a, b)) = stack.pop() {
            let n = sf.count_real_roots(&seq, &a, &b);
            match n {
                0 => {}
                1 => out.push((a, b)),
                _ => {
                    let mid = Rat::from(&a + &b) / Rat::from(2);
                    stack.push((a, mid.clone()));
                    stack.push((mid, b));
                }
            }
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }

    /// Refine an isolating interval to a real root at `prec` bits via
    /// bisection (exact sign tests), then return it as a float.
    pub fn refine_root(&self, interval: &(Rat, Rat), prec: u32) -> rug::Float {
        let sf = self.squarefree_part();
        let (mut a, mut b) = interval.clone();
        // Establish sign at left endpoint; the root lies in (a, b].
        let mut fa = sf.eval(&a);
        if fa.cmp0() == std::cmp::Ordering::Equal {
            return rug::Float::with_val(prec, &a);
        }
        let target = Rat::from((Int::from(1), Int::from(2).pow(prec + 8)));
        while Rat::from(&b - &a) > target {
            let mid = Rat::from(&a + &b) / Rat::from(2);
            let fm = sf.eval(&mid);
            if fm.cmp0() == std::cmp::Ordering::Equal {
                return rug::Float::with_val(prec, &mid);
            }
            if fm.cmp0() == fa.cmp0() {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        rug::Float::with_val(prec, &Rat::from(&a + &b) / Rat::from(2))
    }

    /// All real roots at `prec` bits, ascending.
    pub fn real_roots(&self, prec: u32) -> Vec<rug::Float> {
        self.isolate_real_roots()
            .iter()
            .map(|iv| self.refine_root(iv, prec))
            .collect()
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.cmp0() == std::cmp::Ordering::Less { "-" } else { "+" })?;
            } else if c.cmp0() == std::cmp::Ordering::Less {
                write!(f, "-")?;
            }
            let a = c.clone().abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if a != 1u32 {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64(coeffs)
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[1, 0, -3, 2, 5]);
        let b = p(&[2, 1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = p(&[-1, 1]); // x - 1
        let a = f.mul(&p(&[3, 1]));
        let b = f.mul(&p(&[5, 0, 1]));
        assert_eq!(a.gcd(&b), f.monic());
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let f = p(&[-1, 1]).pow(3).mul(&p(&[1, 1]));
        assert_eq!(f.squarefree_part(), p(&[-1, 1]).mul(&p(&[1, 1])).monic());
    }

    #[test]
    fn primitive_integer_clears_denominators() {
        let f = QPoly::from_coeffs(vec![ratio(1, 2), ratio(-3, 4)]);
        let ints = f.primitive_integer();
        assert_eq!(ints, vec![Int::from(-2), Int::from(3)]);
    }

    #[test]
    fn real_root_isolation_quadratic() {
        // x^2 - 2 has roots +-sqrt(2)
        let f = p(&[-2, 0, 1]);
        let roots = f.real_roots(64);
        assert_eq!(roots.len(), 2);
        let r = roots[1].to_f64();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn sturm_counts_roots_of_cubic() {
        // (x-1)(x-2)(x-3)
        let f = p(&[-6, 11, -6, 1]);
        assert_eq!(f.real_roots(32).len(), 3);
    }
}
