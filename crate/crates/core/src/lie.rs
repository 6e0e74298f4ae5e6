//! Lie algebras given by structure constants, and the single-algebra
//! structural invariants built from them: derived and lower central series,
//! centre and centralizers, Killing form, solvable and Jacobson radicals,
//! quotients and direct sums.
//!
//! The bracket is determined by a rational tensor `c` with
//! `[e_i, e_j] = sum_k c[i][j][k] e_k`; antisymmetry and the Jacobi identity
//! are checked at construction.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rat::{rat_i, Rat};
use crate::subspace::{EchelonBuilder, Subspace};

/// A structure-constant axiom failure, reported by basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Shape(String),
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Shape(s) => write!(f, "shape: {s}"),
            Violation::Antisymmetry { i, j } => write!(f, "antisymmetry fails at ({i}, {j})"),
            Violation::Jacobi { i, j, k } => write!(f, "Jacobi identity fails at ({i}, {j}, {k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    c: Vec<Vec<Vec<Rat>>>,
    /// `sparse[i][j]` lists the nonzero `(k, c[i][j][k])`.
    sparse: Vec<Vec<Vec<(usize, Rat)>>>,
}

/// Zero-filled structure-constant tensor.
pub fn empty_constants(n: usize) -> Vec<Vec<Vec<Rat>>> {
    vec![vec![vec![Rat::zero(); n]; n]; n]
}

/// Sets `[e_i, e_j] = coeffs` and the antisymmetric counterpart.
pub fn set_bracket(c: &mut [Vec<Vec<Rat>>], i: usize, j: usize, coeffs: &[Rat]) {
    assert_ne!(i, j, "bracket of a basis vector with itself is zero");
    for (k, v) in coeffs.iter().enumerate() {
        c[i][j][k] = v.clone();
        c[j][i][k] = -v.clone();
    }
}

/// Checks tensor shape, antisymmetry and the Jacobi identity on all basis
/// triples; an empty list means both axioms hold.
pub fn validate_constants(dim: usize, c: &[Vec<Vec<Rat>>]) -> Vec<Violation> {
    let mut out = Vec::new();
    if c.len() != dim || c.iter().any(|p| p.len() != dim || p.iter().any(|q| q.len() != dim)) {
        out.push(Violation::Shape(format!("tensor is not {dim}x{dim}x{dim}")));
        return out;
    }
    for i in 0..dim {
        for j in i..dim {
            if (0..dim).any(|k| c[i][j][k] != -c[j][i][k].clone()) {
                out.push(Violation::Antisymmetry { i, j });
            }
        }
    }
    if !out.is_empty() {
        // Jacobi only makes sense once the product is antisymmetric
        return out;
    }
    let sparse = sparsify(dim, c);
    for i in 0..dim {
        for j in i + 1..dim {
            for k in j + 1..dim {
                let mut acc = vec![Rat::zero(); dim];
                for (a, b, t) in [(i, j, k), (j, k, i), (k, i, j)] {
                    // [[e_a, e_b], e_t]
                    for (l, v1) in &sparse[a][b] {
                        for (m, v2) in &sparse[*l][t] {
                            acc[*m] += v1 * v2;
                        }
                    }
                }
                if acc.iter().any(|x| !x.is_zero()) {
                    out.push(Violation::Jacobi { i, j, k });
                }
            }
        }
    }
    out
}

fn sparsify(dim: usize, c: &[Vec<Vec<Rat>>]) -> Vec<Vec<Vec<(usize, Rat)>>> {
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    c[i][j]
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(k, v)| (k, v.clone()))
                        .collect()
                })
                .collect()
        })
        .collect()
}

impl LieAlgebra {
    pub fn new(basis_names: Vec<String>, c: Vec<Vec<Vec<Rat>>>) -> Result<Self> {
        let dim = basis_names.len();
        let mut violations = validate_constants(dim, &c);
        let mut seen = std::collections::BTreeSet::new();
        for n in &basis_names {
            if !seen.insert(n) {
                violations.push(Violation::Shape(format!("duplicate basis name {n:?}")));
            }
        }
        if !violations.is_empty() {
            return Err(Error::InvalidAlgebra(violations));
        }
        let sparse = sparsify(dim, &c);
        Ok(LieAlgebra { dim, basis_names, c, sparse })
    }

    pub fn abelian(n: usize) -> Self {
        let names = (0..n).map(|i| format!("x{i}")).collect();
        LieAlgebra::new(names, empty_constants(n)).expect("abelian constants are valid")
    }

    /// Heisenberg algebra: [x, y] = z.
    pub fn heisenberg3() -> Self {
        let mut c = empty_constants(3);
        set_bracket(&mut c, 0, 1, &[rat_i(0), rat_i(0), rat_i(1)]);
        LieAlgebra::new(vec!["x".into(), "y".into(), "z".into()], c).expect("valid")
    }

    /// The nonabelian 2-dimensional algebra: [a, x] = x.
    pub fn solvable2() -> Self {
        let mut c = empty_constants(2);
        set_bracket(&mut c, 0, 1, &[rat_i(0), rat_i(1)]);
        LieAlgebra::new(vec!["a".into(), "x".into()], c).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn constants(&self) -> &[Vec<Vec<Rat>>] {
        &self.c
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.sparse[i][j]
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.dim)
    }

    /// `[e_i, v]`.
    pub fn ad_apply(&self, i: usize, v: &[Rat]) -> Vec<Rat> {
        let mut w = vec![Rat::zero(); self.dim];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (m, co) in &self.sparse[i][j] {
                w[*m] += co * vj;
            }
        }
        w
    }

    pub fn bracket_vec(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut w = vec![Rat::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (m, co) in &self.sparse[i][j] {
                    w[*m] += co * &(xi * yj);
                }
            }
        }
        w
    }

    /// Matrix of `ad e_i` (column-vector convention).
    pub fn ad_basis_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, co) in &self.sparse[i][j] {
                m[(*k, j)] = co.clone();
            }
        }
        m
    }

    /// Span of `[a_i, b_j]` over basis pairs of the two subspaces.
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_space(a)?;
        self.check_space(b)?;
        let mut acc = EchelonBuilder::new(self.dim);
        for pa in a.basis_rows() {
            for pb in b.basis_rows() {
                acc.insert(self.bracket_vec(pa, pb));
                if acc.rank() == self.dim {
                    return Ok(Subspace::full(self.dim));
                }
            }
        }
        Ok(acc.into_subspace())
    }

    /// `L, L^2, (L^2)^2, ...` until stable; solvable iff it reaches zero.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut out = vec![self.full_space()];
        loop {
            let last = out.last().unwrap();
            let next = self.bracket_spaces(last, last).expect("same ambient");
            if &next == last {
                break;
            }
            out.push(next);
        }
        out
    }

    /// `L, [L, L], [L, [L, L]], ...` until stable; nilpotent iff it reaches zero.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = self.full_space();
        let mut out = vec![full.clone()];
        loop {
            let last = out.last().unwrap();
            let next = self.bracket_spaces(&full, last).expect("same ambient");
            if &next == last {
                break;
            }
            out.push(next);
        }
        out
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let full = self.full_space();
        self.bracket_spaces(&full, &full).expect("same ambient")
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    /// Derived chain of a subspace; decides solvability of an ideal without
    /// restricting structure constants.
    pub fn subspace_is_solvable(&self, a: &Subspace) -> bool {
        let mut cur = a.clone();
        loop {
            let next = self.bracket_spaces(&cur, &cur).expect("same ambient");
            if next == cur {
                return cur.is_zero();
            }
            cur = next;
        }
    }

    /// `{x : [x, A] = 0}`, via the kernel of the stacked adjoint system.
    /// For an ideal `A` this is again an ideal.
    pub fn centralizer(&self, a: &Subspace) -> Result<Subspace> {
        self.check_space(a)?;
        let mut rows = Vec::new();
        for arow in a.basis_rows() {
            for m in 0..self.dim {
                let mut row = vec![Rat::zero(); self.dim];
                let mut nonzero = false;
                for i in 0..self.dim {
                    for (j, aj) in arow.iter().enumerate() {
                        if aj.is_zero() {
                            continue;
                        }
                        if let Some((_, co)) = self.sparse[i][j].iter().find(|(k, _)| *k == m) {
                            row[i] += co * aj;
                            nonzero = true;
                        }
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Ok(self.full_space());
        }
        Ok(Subspace::kernel_of(&Matrix::from_rows(rows)?))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.full_space()).expect("full space fits")
    }

    /// Killing form `k(e_i, e_j) = trace(ad e_i . ad e_j)`.
    pub fn killing_form(&self) -> Matrix {
        let mut k = Matrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut acc = Rat::zero();
                for a in 0..self.dim {
                    for (m, v1) in &self.sparse[i][a] {
                        if let Some((_, v2)) = self.sparse[j][*m].iter().find(|(t, _)| t == &a) {
                            acc += v1 * v2;
                        }
                    }
                }
                k[(i, j)] = acc;
            }
        }
        k
    }

    /// Cartan's criterion: nondegenerate Killing form.
    pub fn is_semisimple(&self) -> bool {
        !self.killing_form().det().is_zero()
    }

    /// The unique maximal solvable ideal, computed as the Killing-orthogonal
    /// complement of the derived subalgebra. The characteristic-zero
    /// correctness conditions are re-verified on the result.
    pub fn solvable_radical(&self) -> Subspace {
        let l2 = self.derived_subalgebra();
        let k = self.killing_form();
        let rad = if l2.is_zero() {
            self.full_space()
        } else {
            let mut rows = Vec::new();
            for b in l2.basis_rows() {
                let row = k.apply(b).expect("square form");
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
            if rows.is_empty() {
                self.full_space()
            } else {
                Subspace::kernel_of(&Matrix::from_rows(rows).expect("rectangular"))
            }
        };
        assert!(self.is_ideal(&rad).expect("ambient ok"), "radical candidate is not an ideal");
        assert!(self.subspace_is_solvable(&rad), "radical candidate is not solvable");
        let q = self.quotient(&rad).expect("radical is an ideal");
        assert!(
            q.algebra.dim() == 0 || q.algebra.is_semisimple(),
            "quotient by the radical is not semisimple"
        );
        rad
    }

    /// `[L, Rad(L)]`; equals the intersection of the maximal ideals in
    /// characteristic zero. The standard chain
    /// `Rad^2 <= J = Rad . L^2 <= Rad` is asserted.
    pub fn jacobson_radical(&self) -> Subspace {
        let rad = self.solvable_radical();
        let jac = self.bracket_spaces(&self.full_space(), &rad).expect("same ambient");
        let rad2 = self.bracket_spaces(&rad, &rad).expect("same ambient");
        let l2 = self.derived_subalgebra();
        assert!(rad2.leq(&jac).unwrap(), "Rad^2 not inside J");
        assert_eq!(jac, rad.intersect(&l2).unwrap(), "J differs from Rad meet L^2");
        assert!(jac.leq(&rad).unwrap(), "J not inside Rad");
        jac
    }

    pub fn is_ideal(&self, a: &Subspace) -> Result<bool> {
        self.check_space(a)?;
        for row in a.basis_rows() {
            for i in 0..self.dim {
                if !a.contains_vec(&self.ad_apply(i, row))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Smallest ideal containing `a`: spin under all basis actions to a
    /// fixpoint (reached in at most dim L rounds).
    pub fn ideal_closure(&self, a: &Subspace) -> Result<Subspace> {
        self.check_space(a)?;
        let mut acc = EchelonBuilder::new(self.dim);
        let mut work: Vec<Vec<Rat>> = Vec::new();
        for row in a.basis_rows() {
            if let Some(r) = acc.insert_and_get(row.to_vec()) {
                work.push(r);
            }
        }
        while let Some(v) = work.pop() {
            for i in 0..self.dim {
                if acc.rank() == self.dim {
                    return Ok(self.full_space());
                }
                let w = self.ad_apply(i, &v);
                if let Some(r) = acc.insert_and_get(w) {
                    work.push(r);
                }
            }
        }
        Ok(acc.into_subspace())
    }

    /// Quotient by an ideal, on the non-pivot coordinates of the ideal's
    /// canonical basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        self.check_space(ideal)?;
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let free: Vec<usize> = ideal.free_cols();
        let m = free.len();
        let project = |v: &[Rat]| -> Vec<Rat> {
            let red = ideal.reduce_vec(v);
            free.iter().map(|&c| red[c].clone()).collect()
        };
        let mut c = empty_constants(m);
        for a in 0..m {
            for b in a + 1..m {
                let mut br = vec![Rat::zero(); self.dim];
                for (k, co) in &self.sparse[free[a]][free[b]] {
                    br[*k] = co.clone();
                }
                let coeffs = project(&br);
                set_bracket(&mut c, a, b, &coeffs);
            }
        }
        let names = free.iter().map(|&i| self.basis_names[i].clone()).collect();
        let algebra = LieAlgebra::new(names, c)?;
        Ok(Quotient { algebra, ideal: ideal.clone(), free })
    }

    /// Direct sum as ideals; both summands embed block-diagonally.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let mut names = self.basis_names.clone();
        for name in &other.basis_names {
            let mut cand = name.clone();
            while names.contains(&cand) {
                cand.push('\'');
            }
            names.push(cand);
        }
        let mut c = empty_constants(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, co) in &self.sparse[i][j] {
                    c[i][j][*k] = co.clone();
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for (k, co) in &other.sparse[i][j] {
                    c[self.dim + i][self.dim + j][self.dim + k] = co.clone();
                }
            }
        }
        LieAlgebra::new(names, c).expect("block-diagonal constants stay valid")
    }

    /// Sum of all simple ideals, computed as `[C, C]` for
    /// `C = C_L(Rad(L))`: the radical of that centralizer is central in it,
    /// so its derived algebra is exactly the semisimple socle.
    pub fn simple_socle(&self) -> Subspace {
        if self.dim == 0 {
            return self.zero_space();
        }
        let rad = self.solvable_radical();
        let c = self.centralizer(&rad).expect("same ambient");
        self.bracket_spaces(&c, &c).expect("same ambient")
    }

    /// True when `J(L)` meets the centre nontrivially; certifies a nonzero
    /// Frattini subalgebra without enumerating ideals.
    pub fn jacobson_meets_center(&self) -> bool {
        let j = self.jacobson_radical();
        let z = self.center();
        !j.intersect(&z).expect("same ambient").is_zero()
    }

    fn check_space(&self, a: &Subspace) -> Result<()> {
        if a.ambient_dim() != self.dim {
            return Err(Error::DimMismatch(self.dim, a.ambient_dim()));
        }
        Ok(())
    }
}

/// Quotient algebra together with its projection data.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    ideal: Subspace,
    free: Vec<usize>,
}

impl Quotient {
    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn project_vec(&self, v: &[Rat]) -> Vec<Rat> {
        let red = self.ideal.reduce_vec(v);
        self.free.iter().map(|&c| red[c].clone()).collect()
    }

    pub fn project_space(&self, s: &Subspace) -> Subspace {
        Subspace::span(self.free.len(), s.basis_rows().map(|r| self.project_vec(r)))
    }

    /// Representative in the ambient algebra (coordinates at free columns).
    pub fn lift_vec(&self, w: &[Rat]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.ideal.ambient_dim()];
        for (&c, x) in self.free.iter().zip(w) {
            v[c] = x.clone();
        }
        v
    }

    /// Full preimage of a subspace of the quotient.
    pub fn pullback(&self, s: &Subspace) -> Subspace {
        let mut b = EchelonBuilder::from_subspace(&self.ideal);
        for row in s.basis_rows() {
            b.insert(self.lift_vec(row));
        }
        b.into_subspace()
    }
}

/// Classification label from the structural decomposition of algebras with
/// finitely many ideals (faithful, nonzero Jacobson radical cases I-IV).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneralType {
    I,
    II,
    III,
    IV,
    Reductive,
    Nonfaithful,
    NotFinite,
}

impl std::fmt::Display for GeneralType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GeneralType::I => "I",
            GeneralType::II => "II",
            GeneralType::III => "III",
            GeneralType::IV => "IV",
            GeneralType::Reductive => "reductive",
            GeneralType::Nonfaithful => "nonfaithful",
            GeneralType::NotFinite => "not-finite",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct StructureReport {
    pub derived_series: Vec<Subspace>,
    pub lower_central: Vec<Subspace>,
    pub center: Subspace,
    pub rad: Subspace,
    pub jac: Subspace,
    pub is_solvable: bool,
    pub is_nilpotent: bool,
    pub is_semisimple: bool,
    pub general_type: GeneralType,
}

/// Computes all structural invariants and the decomposition label.
pub fn analyze(l: &LieAlgebra) -> StructureReport {
    let derived = l.derived_series();
    let lower = l.lower_central_series();
    let center = l.center();
    let rad = l.solvable_radical();
    let jac = l.jacobson_radical();
    assert!(jac.leq(&rad).unwrap(), "J(L) must sit inside Rad(L)");
    let is_solvable = derived.last().unwrap().is_zero();
    let is_nilpotent = lower.last().unwrap().is_zero();
    let general_type = classify(l, &derived, &center, &rad, &jac, is_solvable);
    StructureReport {
        derived_series: derived,
        lower_central: lower,
        center,
        rad,
        jac,
        is_solvable,
        is_nilpotent,
        is_semisimple: l.is_semisimple(),
        general_type,
    }
}

fn classify(
    l: &LieAlgebra,
    derived: &[Subspace],
    center: &Subspace,
    rad: &Subspace,
    jac: &Subspace,
    is_solvable: bool,
) -> GeneralType {
    if jac.is_zero() {
        return GeneralType::Reductive;
    }
    if !l.simple_socle().is_zero() {
        return GeneralType::Nonfaithful;
    }
    let l2 = &derived[1.min(derived.len() - 1)];
    let full = l.full_space();
    if *l2 == full && rad == jac {
        return GeneralType::I;
    }
    let codim1 = l2.dim() + 1 == l.dim();
    if codim1
        && center.dim() == 1
        && center.intersect(l2).unwrap().is_zero()
        && l.bracket_spaces(l2, l2).unwrap() == *l2
    {
        return GeneralType::II;
    }
    if codim1 && !is_solvable && l.centralizer(l2).unwrap().leq(jac).unwrap() {
        return GeneralType::III;
    }
    if codim1 && is_solvable && l2 == jac {
        return GeneralType::IV;
    }
    GeneralType::NotFinite
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sl2() -> LieAlgebra {
        // [h,e] = 2e, [h,f] = -2f, [e,f] = h with basis order (e, f, h)
        let mut c = empty_constants(3);
        set_bracket(&mut c, 2, 0, &[rat_i(2), rat_i(0), rat_i(0)]);
        set_bracket(&mut c, 2, 1, &[rat_i(0), rat_i(-2), rat_i(0)]);
        set_bracket(&mut c, 0, 1, &[rat_i(0), rat_i(0), rat_i(1)]);
        LieAlgebra::new(vec!["e".into(), "f".into(), "h".into()], c).unwrap()
    }

    fn sp(ambient: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::span(
            ambient,
            rows.iter().map(|r| r.iter().map(|&x| rat_i(x)).collect::<Vec<_>>()),
        )
    }

    #[test]
    fn validation_examples() {
        assert!(LieAlgebra::abelian(3).dim() == 3);
        assert!(sl2().is_semisimple());
        // flip one side of [e,f] = h: antisymmetry breaks at (e, f)
        let mut c = empty_constants(3);
        set_bracket(&mut c, 2, 0, &[rat_i(2), rat_i(0), rat_i(0)]);
        set_bracket(&mut c, 2, 1, &[rat_i(0), rat_i(-2), rat_i(0)]);
        set_bracket(&mut c, 0, 1, &[rat_i(0), rat_i(0), rat_i(1)]);
        c[1][0][2] = rat_i(1);
        let vs = validate_constants(3, &c);
        assert!(vs.contains(&Violation::Antisymmetry { i: 0, j: 1 }));
        // break Jacobi instead: [h,e] = 2e but [e,f] = e
        let mut c = empty_constants(3);
        set_bracket(&mut c, 2, 0, &[rat_i(2), rat_i(0), rat_i(0)]);
        set_bracket(&mut c, 2, 1, &[rat_i(0), rat_i(-2), rat_i(0)]);
        set_bracket(&mut c, 0, 1, &[rat_i(1), rat_i(0), rat_i(0)]);
        let vs = validate_constants(3, &c);
        assert!(vs.iter().any(|v| matches!(v, Violation::Jacobi { .. })));
    }

    #[test]
    fn bracket_spaces_examples() {
        let ab = LieAlgebra::abelian(2);
        let full = ab.full_space();
        assert!(ab.bracket_spaces(&full, &full).unwrap().is_zero());
        let l = sl2();
        assert_eq!(l.bracket_spaces(&l.full_space(), &l.full_space()).unwrap(), l.full_space());
    }

    #[test]
    fn series_examples() {
        let ab = LieAlgebra::abelian(2);
        let ds = ab.derived_series();
        assert_eq!(ds.len(), 2);
        assert!(ds[1].is_zero());
        assert!(ab.is_solvable() && ab.is_nilpotent());

        let l = sl2();
        assert_eq!(l.derived_series(), vec![l.full_space()]);
        assert!(!l.is_solvable());

        let s = LieAlgebra::solvable2();
        let ds = s.derived_series();
        assert_eq!(ds.len(), 3);
        assert_eq!(ds[1], sp(2, &[&[0, 1]]));
        assert!(ds[2].is_zero());
        assert!(s.is_solvable() && !s.is_nilpotent());
    }

    #[test]
    fn center_and_centralizer() {
        assert_eq!(LieAlgebra::abelian(3).center(), Subspace::full(3));
        assert!(sl2().center().is_zero());
        let h = LieAlgebra::heisenberg3();
        let l2 = h.derived_subalgebra();
        assert_eq!(l2, sp(3, &[&[0, 0, 1]]));
        assert_eq!(h.centralizer(&l2).unwrap(), h.full_space());
        assert_eq!(h.center(), l2);
    }

    #[test]
    fn killing_form_values() {
        let k = LieAlgebra::abelian(2).killing_form();
        assert!(k.is_zero());
        assert!(!LieAlgebra::abelian(2).is_semisimple());

        let l = sl2();
        let k = l.killing_form();
        assert_eq!(k[(2, 2)], rat_i(8));
        assert_eq!(k[(0, 1)], rat_i(4));
        assert_eq!(k[(1, 0)], rat_i(4));
        assert_eq!(k[(0, 0)], rat_i(0));
        assert!(l.is_semisimple());

        assert!(l.direct_sum(&l).is_semisimple());
    }

    #[test]
    fn radicals() {
        let s = LieAlgebra::solvable2();
        assert_eq!(s.solvable_radical(), s.full_space());
        assert_eq!(s.jacobson_radical(), sp(2, &[&[0, 1]]));

        let l = sl2();
        assert!(l.solvable_radical().is_zero());
        assert!(l.jacobson_radical().is_zero());

        // reductive: semisimple plus centre has trivial Jacobson radical
        let red = sl2().direct_sum(&LieAlgebra::abelian(1));
        assert!(red.jacobson_radical().is_zero());
    }

    #[test]
    fn quotient_examples() {
        let h = LieAlgebra::heisenberg3();
        let q = h.quotient(&sp(3, &[&[0, 0, 1]])).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.derived_subalgebra().is_zero()); // abelian(2)
        let q0 = h.quotient(&h.zero_space()).unwrap();
        assert_eq!(q0.algebra, h);
        let qfull = h.quotient(&h.full_space()).unwrap();
        assert_eq!(qfull.algebra.dim(), 0);
        // a line off the centre is not an ideal
        assert!(h.quotient(&sp(3, &[&[1, 0, 0]])).is_err());
    }

    #[test]
    fn closures() {
        let l = sl2();
        assert!(l.ideal_closure(&l.zero_space()).unwrap().is_zero());
        assert_eq!(l.ideal_closure(&sp(3, &[&[1, 0, 0]])).unwrap(), l.full_space());
        let h = LieAlgebra::heisenberg3();
        assert_eq!(
            h.ideal_closure(&sp(3, &[&[1, 0, 0]])).unwrap(),
            sp(3, &[&[1, 0, 0], &[0, 0, 1]])
        );
    }

    #[test]
    fn direct_sum_embeds_as_ideals() {
        let l = sl2().direct_sum(&LieAlgebra::abelian(1));
        assert_eq!(l.dim(), 4);
        let s_blk = sp(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
        assert!(l.is_ideal(&s_blk).unwrap());
        assert!(l.is_ideal(&sp(4, &[&[0, 0, 0, 1]])).unwrap());
        // direct sum with 0 changes nothing
        let same = sl2().direct_sum(&LieAlgebra::abelian(0));
        assert_eq!(same.dim(), 3);
    }

    #[test]
    fn simple_socle_direct() {
        assert_eq!(sl2().simple_socle(), sl2().full_space());
        assert!(LieAlgebra::heisenberg3().simple_socle().is_zero());
        let mixed = sl2().direct_sum(&LieAlgebra::abelian(1));
        assert_eq!(mixed.simple_socle().dim(), 3);
    }

    #[test]
    fn classification_labels() {
        assert_eq!(analyze(&sl2()).general_type, GeneralType::Reductive);
        assert_eq!(analyze(&LieAlgebra::abelian(2)).general_type, GeneralType::Reductive);
        assert_eq!(analyze(&LieAlgebra::solvable2()).general_type, GeneralType::IV);
        // heisenberg3: J = Fz = L^2 but codim 2, no label applies
        assert_eq!(analyze(&LieAlgebra::heisenberg3()).general_type, GeneralType::NotFinite);
        // simple summand present and J nonzero: nonfaithful
        let l = sl2().direct_sum(&LieAlgebra::solvable2());
        assert_eq!(analyze(&l).general_type, GeneralType::Nonfaithful);
    }

    #[test]
    fn jacobson_center_certificate() {
        assert!(LieAlgebra::heisenberg3().jacobson_meets_center());
        assert!(!LieAlgebra::solvable2().jacobson_meets_center());
    }
}
