//! Rational polynomials in one variable.
//!
//! Coefficients are stored constant-term first. Only the operations the
//! lattice machinery needs are provided: exact division, gcd, square-free
//! parts, minimal polynomials of matrices, and extraction of irreducible
//! factors of degree at most two.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rat::{exact_sqrt, format_rat, rat_i, Rat};

/// Polynomial with rational coefficients, constant term first.
/// The zero polynomial is the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly(Vec<Rat>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![Rat::one()])
    }

    /// The monomial t.
    pub fn t() -> Self {
        Poly::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.0.last()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.recip();
                Poly::new(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix.
    pub fn eval_matrix(&self, t: &Matrix) -> Matrix {
        let n = t.rows();
        let mut acc = Matrix::zero(n, n);
        for c in self.0.iter().rev() {
            acc = acc.mul(t).expect("square");
            let scaled = Matrix::identity(n).scale(c);
            acc = acc.add(&scaled).expect("square");
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_i(i as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }

    /// Exact division with remainder; panics on zero divisor.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let mut rem = self.0.clone();
        let mut quo = vec![Rat::zero(); self.0.len().saturating_sub(dd)];
        let lead_inv = divisor.leading().unwrap().recip();
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() * &lead_inv;
            if !f.is_zero() {
                for (j, c) in divisor.0.iter().enumerate() {
                    if !c.is_zero() {
                        rem[k + j] -= c * &f;
                    }
                }
                quo[k] = f;
            }
            rem.pop();
        }
        (Poly::new(quo), Poly::new(rem))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.divrem(self).1.is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, each once.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Companion matrix of the monic normalization; degree must be >= 1.
    pub fn companion(&self) -> Matrix {
        let m = self.monic();
        let d = m.degree().expect("companion of a constant");
        assert!(d >= 1, "companion of a constant");
        let mut c = Matrix::zero(d, d);
        for i in 1..d {
            c[(i, i - 1)] = Rat::one();
        }
        for i in 0..d {
            c[(i, d - 1)] = -m.0[i].clone();
        }
        c
    }

    /// Irreducibility over Q, decided for degrees 1 and 2 only; degree 2 via
    /// the discriminant (reducible iff b^2 - 4ac is a rational square).
    pub fn irreducible_deg_le2(&self) -> Result<bool> {
        match self.degree() {
            Some(1) => Ok(true),
            Some(2) => {
                let c = &self.0[0];
                let b = &self.0[1];
                let a = &self.0[2];
                let disc = b * b - rat_i(4) * a * c;
                Ok(exact_sqrt(&disc).is_none())
            }
            _ => Err(Error::BadParameter(format!(
                "irreducibility decidable only for degree 1 or 2, got {self}"
            ))),
        }
    }

    /// Distinct rational roots, found by the rational-root theorem after
    /// clearing denominators. Divisor enumeration falls back to a small
    /// candidate set when a coefficient refuses to factor quickly.
    pub fn rational_roots(&self) -> Vec<Rat> {
        let Some(d) = self.degree() else { return Vec::new() };
        if d == 0 {
            return Vec::new();
        }
        // clear denominators
        let mut lcm = BigInt::one();
        for c in &self.0 {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> =
            self.0.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
        // strip t^k
        let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        let mut roots = Vec::new();
        if low > 0 {
            roots.push(Rat::zero());
        }
        let a0 = ints[low].abs();
        let an = ints.last().unwrap().abs();
        let ps = divisors_capped(&a0);
        let qs = divisors_capped(&an);
        for p in &ps {
            for q in &qs {
                let cand = Rat::new(p.clone(), q.clone());
                for c in [cand.clone(), -cand] {
                    if self.eval(&c).is_zero() && !roots.contains(&c) {
                        roots.push(c);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Distinct monic irreducible factors of degree <= 2, in a deterministic
    /// order. Linear factors come from rational roots; quadratic factors from
    /// the degree-2 remainder (irreducible by construction) or a bounded
    /// small-coefficient division probe on higher-degree remainders.
    pub fn factors_deg_le2(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        let sf = self.squarefree_part();
        if sf.degree().unwrap_or(0) == 0 {
            return out;
        }
        let mut rest = sf;
        for r in rest.clone().rational_roots() {
            let lin = Poly::new(vec![-r, Rat::one()]);
            if lin.divides(&rest) {
                rest = rest.divrem(&lin).0;
                out.push(lin);
            }
        }
        match rest.degree() {
            Some(2) => out.push(rest.monic()),
            Some(d) if d >= 3 => {
                for b in -4i64..=4 {
                    for c in -4i64..=4 {
                        if c == 0 {
                            continue; // roots already stripped
                        }
                        let quad = Poly::from_i64(&[c, b, 1]);
                        if quad.divides(&rest) && quad.irreducible_deg_le2().unwrap_or(false) {
                            rest = rest.divrem(&quad).0;
                            out.push(quad);
                        }
                    }
                }
            }
            _ => {}
        }
        out.sort();
        out
    }
}

impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            seq.serialize_element(&format_rat(c))?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<crate::rat::RatInput>::deserialize(d)?;
        let coeffs = raw
            .into_iter()
            .map(|r| r.into_rat().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", format_rat(c))?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{}*t", format_rat(c))?,
                _ if c.is_one() => write!(f, "t^{i}")?,
                _ => write!(f, "{}*t^{i}", format_rat(c))?,
            }
        }
        Ok(())
    }
}

/// Minimal polynomial of a square matrix, via the first linear dependence
/// among its flattened powers.
pub fn min_poly(t: &Matrix) -> Poly {
    assert_eq!(t.rows(), t.cols());
    let n = t.rows();
    if n == 0 {
        return Poly::one();
    }
    let flat = |m: &Matrix| -> Vec<Rat> {
        let mut v = Vec::with_capacity(n * n);
        for i in 0..n {
            v.extend(m.row(i).iter().cloned());
        }
        v
    };
    // stored rows carry the combination of powers they reduce to
    let mut rows: Vec<(Vec<Rat>, Vec<Rat>)> = Vec::new();
    let mut power = Matrix::identity(n);
    for k in 0..=n {
        let mut v = flat(&power);
        let mut comb = vec![Rat::zero(); n + 2];
        comb[k] = Rat::one();
        for (row, rc) in &rows {
            let p = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (j, r) in row.iter().enumerate() {
                    if !r.is_zero() {
                        v[j] -= r * &f;
                    }
                }
                for (j, r) in rc.iter().enumerate() {
                    if !r.is_zero() {
                        comb[j] -= r * &f;
                    }
                }
            }
        }
        if v.iter().all(Rat::is_zero) {
            return Poly::new(comb).monic();
        }
        let lead = v.iter().position(|x| !x.is_zero()).unwrap();
        let inv = v[lead].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for x in comb.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        rows.push((v, comb));
        power = power.mul(t).expect("square");
    }
    unreachable!("minimal polynomial has degree at most n");
}

/// All positive divisors, or a truncated set when the factorization stalls.
/// Trial division runs over primes up to 10^5; a surviving cofactor is kept
/// as if prime, which can only shrink the candidate set.
fn divisors_capped(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, primes: &mut Vec<(BigInt, u32)>| {
        if let Some(e) = primes.iter_mut().find(|(q, _)| *q == p) {
            e.1 += 1;
        } else {
            primes.push((p, 1));
        }
    };
    let mut d = BigInt::from(2u32);
    let limit = BigInt::from(100_000u32);
    while &d * &d <= n && d <= limit {
        while (&n % &d).is_zero() {
            n /= &d;
            push(d.clone(), &mut primes);
        }
        d += 1;
    }
    if !n.is_one() {
        push(n, &mut primes);
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in &primes {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= p;
                if next.len() > 4096 {
                    break;
                }
            }
        }
        divs = next;
        if divs.len() > 4096 {
            divs.truncate(4096);
            break;
        }
    }
    divs.sort();
    divs.dedup();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn divrem_and_gcd() {
        let p = Poly::from_i64(&[-1, 0, 1]); // t^2 - 1
        let d = Poly::from_i64(&[-1, 1]); // t - 1
        let (q, r) = p.divrem(&d);
        assert_eq!(q, Poly::from_i64(&[1, 1]));
        assert!(r.is_zero());
        let g = p.gcd(&Poly::from_i64(&[1, 1])); // t + 1
        assert_eq!(g, Poly::from_i64(&[1, 1]));
    }

    #[test]
    fn squarefree_and_roots() {
        // (t-1)^2 (t+2)
        let p = Poly::from_i64(&[-1, 1]).mul(&Poly::from_i64(&[-1, 1])).mul(&Poly::from_i64(&[2, 1]));
        let sf = p.squarefree_part();
        assert_eq!(sf, Poly::from_i64(&[-1, 1]).mul(&Poly::from_i64(&[2, 1])).monic());
        assert_eq!(p.rational_roots(), vec![rat_i(-2), rat_i(1)]);
        // 2t - 1 has root 1/2
        assert_eq!(Poly::from_i64(&[-1, 2]).rational_roots(), vec![rat(1, 2)]);
    }

    #[test]
    fn irreducibility_by_discriminant() {
        assert!(Poly::from_i64(&[1, 0, 1]).irreducible_deg_le2().unwrap()); // t^2+1
        assert!(Poly::from_i64(&[-2, 0, 1]).irreducible_deg_le2().unwrap()); // t^2-2
        assert!(!Poly::from_i64(&[-4, 0, 1]).irreducible_deg_le2().unwrap()); // t^2-4
        assert!(Poly::from_i64(&[-1, 1]).irreducible_deg_le2().unwrap());
    }

    #[test]
    fn min_poly_of_companions() {
        let p = Poly::from_i64(&[1, 0, 1]); // t^2 + 1
        assert_eq!(min_poly(&p.companion()), p);
        // diag(1,2) block form via companion of (t-1)(t-2) = t^2 - 3t + 2
        let q = Poly::from_i64(&[2, -3, 1]);
        assert_eq!(min_poly(&q.companion()), q);
        assert_eq!(min_poly(&Matrix::identity(3)), Poly::from_i64(&[-1, 1]));
    }

    #[test]
    fn factor_extraction() {
        // (t-1)(t^2+1)(t^2-2): roots then two quadratics from the quartic rest
        let p = Poly::from_i64(&[-1, 1])
            .mul(&Poly::from_i64(&[1, 0, 1]))
            .mul(&Poly::from_i64(&[-2, 0, 1]));
        let f = p.factors_deg_le2();
        assert!(f.contains(&Poly::from_i64(&[-1, 1])));
        assert!(f.contains(&Poly::from_i64(&[1, 0, 1])));
        assert!(f.contains(&Poly::from_i64(&[-2, 0, 1])));
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn companion_matches_min_and_char() {
        let p = Poly::from_i64(&[2, -3, 1]);
        let c = p.companion();
        // cyclic: min poly equals characteristic polynomial
        assert_eq!(min_poly(&c).degree(), Some(2));
        assert!(!c.det().is_zero());
    }
}
