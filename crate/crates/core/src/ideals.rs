//! Ideal enumeration.
//!
//! Enumerates all ideals of a Lie algebra when the lattice is finite,
//! detects infinite lattices through the pencil of invariant subspaces that
//! a commuting isomorphism between two disjoint abelian atoms produces, and
//! derives socle and Frattini data from a completed enumeration.
//!
//! The procedure seeds a candidate family with the structurally forced
//! ideals (series terms, centre, radicals, single-generator closures),
//! closes it under sums, intersections, products and centralizers, and then
//! certifies completeness by probing every cover quotient for proper
//! invariant subspaces. `Complete' therefore means: closed, no pencil, and
//! no probe found a gap.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::{intertwiner_space, invertible_in_span, Matrix};
use crate::poly::min_poly;
use crate::rat::{rat_i, Rat};
use crate::subspace::Subspace;

/// Outcome of an enumeration run.
#[derive(Debug, Clone)]
pub enum Status {
    Complete,
    InfiniteDetected(Box<PencilWitness>),
    BudgetExceeded,
}

/// Certificate that the ideal lattice is infinite: in the quotient by
/// `modulus`, the invariant subspaces `p` and `q` pull back two disjoint
/// abelian atoms carrying the commuting isomorphism `phi`, so the graphs of
/// `alpha * phi` form pairwise distinct ideals for every scalar `alpha`.
#[derive(Debug, Clone)]
pub struct PencilWitness {
    pub modulus: Subspace,
    pub p: Subspace,
    pub q: Subspace,
    pub phi: Matrix,
    p_bar: Subspace,
    q_bar: Subspace,
}

impl PencilWitness {
    /// Materializes the ideal `{a + alpha phi(a)}` pulled back to the algebra.
    pub fn pencil_ideal(&self, l: &LieAlgebra, alpha: &Rat) -> Result<Subspace> {
        let qt = l.quotient(&self.modulus)?;
        let qn = qt.algebra.dim();
        let q_rows: Vec<Vec<Rat>> = self.q_bar.basis_rows().map(|r| r.to_vec()).collect();
        let rows = self.p_bar.basis_rows().enumerate().map(|(k, p_row)| {
            let mut v = p_row.to_vec();
            for (j, q_row) in q_rows.iter().enumerate() {
                let co = &self.phi[(j, k)] * alpha;
                if !co.is_zero() {
                    for (x, q) in v.iter_mut().zip(q_row) {
                        *x += q * &co;
                    }
                }
            }
            v
        });
        let graph = Subspace::span(qn, rows);
        Ok(qt.pullback(&graph))
    }
}

#[derive(Debug, Clone)]
pub struct IdealSet {
    pub ideals: BTreeSet<Subspace>,
    pub status: Status,
}

impl IdealSet {
    pub fn is_complete(&self) -> bool {
        matches!(self.status, Status::Complete)
    }

    pub fn witness(&self) -> Option<&PencilWitness> {
        match &self.status {
            Status::InfiniteDetected(w) => Some(w),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }
}

/// Bounds for the completeness probes.
#[derive(Debug, Clone)]
pub struct ProbeConfig {
    /// Maximum number of coordinate-pattern probe vectors per cover.
    pub pattern_cap: usize,
    /// Minimal-polynomial kernel probes run only on modules up to this dim.
    pub minpoly_dim_cap: usize,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { pattern_cap: 256, minpoly_dim_cap: 12 }
    }
}

pub fn enumerate_ideals(l: &LieAlgebra, budget: usize) -> Result<IdealSet> {
    enumerate_ideals_with(l, budget, &ProbeConfig::default())
}

pub fn enumerate_ideals_with(l: &LieAlgebra, budget: usize, cfg: &ProbeConfig) -> Result<IdealSet> {
    if budget < 2 {
        return Err(Error::BadParameter(format!("budget must be at least 2, got {budget}")));
    }
    let mut set: BTreeSet<Subspace> = BTreeSet::new();
    let mut over = false;
    let n = l.dim();

    let insert = |set: &mut BTreeSet<Subspace>, s: Subspace, over: &mut bool| -> bool {
        debug_assert!(l.is_ideal(&s).unwrap(), "candidate is not an ideal");
        let grew = set.insert(s);
        if set.len() > budget {
            *over = true;
        }
        grew
    };

    // Seeds: bottom, top, both series, centre, radicals, the centralizer of
    // the derived subalgebra, and single-generator closures e_i, e_i +- e_j.
    insert(&mut set, l.zero_space(), &mut over);
    insert(&mut set, l.full_space(), &mut over);
    for t in l.derived_series().into_iter().chain(l.lower_central_series()) {
        insert(&mut set, t, &mut over);
    }
    insert(&mut set, l.center(), &mut over);
    let rad = l.solvable_radical();
    insert(&mut set, l.jacobson_radical(), &mut over);
    insert(&mut set, rad, &mut over);
    let l2 = l.derived_subalgebra();
    insert(&mut set, l.centralizer(&l2)?, &mut over);
    let unit = |i: usize| {
        let mut v = vec![Rat::zero(); n];
        v[i] = rat_i(1);
        v
    };
    for i in 0..n {
        let seed = Subspace::span(n, [unit(i)]);
        insert(&mut set, l.ideal_closure(&seed)?, &mut over);
        if over {
            break;
        }
        for j in i + 1..n {
            for sign in [1i64, -1] {
                let mut v = unit(i);
                v[j] = rat_i(sign);
                let seed = Subspace::span(n, [v]);
                insert(&mut set, l.ideal_closure(&seed)?, &mut over);
            }
            if over {
                break;
            }
        }
    }

    let finish_over = |l: &LieAlgebra, set: BTreeSet<Subspace>| -> IdealSet {
        let status = match detect_infinite(l, &set) {
            Some(w) => Status::InfiniteDetected(Box::new(w)),
            None => Status::BudgetExceeded,
        };
        IdealSet { ideals: set, status }
    };

    if over {
        return Ok(finish_over(l, set));
    }
    if let Some(w) = detect_infinite(l, &set) {
        return Ok(IdealSet { ideals: set, status: Status::InfiniteDetected(Box::new(w)) });
    }

    // Lattice closure: sums, intersections, pairwise products, centralizers.
    let close = |set: &mut BTreeSet<Subspace>, over: &mut bool| -> Result<Option<PencilWitness>> {
        loop {
            let members: Vec<Subspace> = set.iter().cloned().collect();
            let mut fresh: Vec<Subspace> = Vec::new();
            for (i, a) in members.iter().enumerate() {
                fresh.push(l.centralizer(a)?);
                for b in members.iter().skip(i + 1) {
                    fresh.push(a.sum(b)?);
                    fresh.push(a.intersect(b)?);
                    fresh.push(l.bracket_spaces(a, b)?);
                }
                fresh.push(l.bracket_spaces(a, a)?);
            }
            let mut grew = false;
            for s in fresh {
                grew |= insert(set, s, over);
                if *over {
                    return Ok(None);
                }
            }
            if !grew {
                return Ok(None);
            }
            if let Some(w) = detect_infinite(l, set) {
                return Ok(Some(w));
            }
        }
    };

    if let Some(w) = close(&mut set, &mut over)? {
        return Ok(IdealSet { ideals: set, status: Status::InfiniteDetected(Box::new(w)) });
    }
    if over {
        return Ok(finish_over(l, set));
    }

    // Completeness pass: probe every cover quotient; any discovered invariant
    // subspace is pulled back, added, and closure reruns.
    loop {
        let mut found = None;
        for (a, b) in cover_pairs(&set) {
            if let Some(s) = cover_probe(l, &a, &b, cfg)? {
                found = Some(s);
                break;
            }
        }
        let Some(s) = found else {
            return Ok(IdealSet { ideals: set, status: Status::Complete });
        };
        insert(&mut set, s, &mut over);
        if over {
            return Ok(finish_over(l, set));
        }
        if let Some(w) = detect_infinite(l, &set) {
            return Ok(IdealSet { ideals: set, status: Status::InfiniteDetected(Box::new(w)) });
        }
        if let Some(w) = close(&mut set, &mut over)? {
            return Ok(IdealSet { ideals: set, status: Status::InfiniteDetected(Box::new(w)) });
        }
        if over {
            return Ok(finish_over(l, set));
        }
    }
}

/// Cover pairs (a, b): a strictly below b with no member strictly between.
fn cover_pairs(set: &BTreeSet<Subspace>) -> Vec<(Subspace, Subspace)> {
    let members: Vec<&Subspace> = set.iter().collect();
    let m = members.len();
    let mut leq = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            leq[i][j] = i == j || members[i].leq(members[j]).unwrap_or(false);
        }
    }
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j || !leq[i][j] {
                continue;
            }
            let covered = (0..m).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
            if !covered {
                out.push((members[i].clone(), members[j].clone()));
            }
        }
    }
    out
}

/// Coordinates of `v` (assumed inside `module`) with respect to the module's
/// canonical basis: the values at the pivot columns.
fn module_coords(module: &Subspace, v: &[Rat]) -> Vec<Rat> {
    debug_assert!(module.contains_vec(v).unwrap_or(false));
    module.pivot_cols().iter().map(|&c| v[c].clone()).collect()
}

/// Matrix of `ad e_x` restricted to an invariant module, in module coords.
fn restricted_action(alg: &LieAlgebra, x: usize, module: &Subspace) -> Matrix {
    let d = module.dim();
    let mut t = Matrix::zero(d, d);
    for (k, row) in module.basis_rows().enumerate() {
        let w = alg.ad_apply(x, row);
        for (m, co) in module_coords(module, &w).into_iter().enumerate() {
            t[(m, k)] = co;
        }
    }
    t
}

fn from_coords(module: &Subspace, coords: &[Rat]) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); module.ambient_dim()];
    for (co, row) in coords.iter().zip(module.basis_rows()) {
        if !co.is_zero() {
            for (x, r) in v.iter_mut().zip(row) {
                *x += r * co;
            }
        }
    }
    v
}

/// Probes the quotient module `b/a` for a proper nonzero invariant subspace;
/// a hit is returned pulled back to the ambient algebra. Probe vectors are
/// small coordinate patterns (entries in -2..=2, at most three nonzero),
/// followed by kernels of irreducible minimal-polynomial factors of each
/// basis action on modules of bounded dimension.
pub fn cover_probe(
    l: &LieAlgebra,
    a: &Subspace,
    b: &Subspace,
    cfg: &ProbeConfig,
) -> Result<Option<Subspace>> {
    let qt = l.quotient(a)?;
    let module = qt.project_space(b);
    let d = module.dim();
    if d <= 1 {
        return Ok(None);
    }
    let spin = |coords: &[Rat]| -> Result<Option<Subspace>> {
        let v = from_coords(&module, coords);
        let closure = qt.algebra.ideal_closure(&Subspace::span(qt.algebra.dim(), [v]))?;
        debug_assert!(closure.leq(&module).unwrap(), "module is invariant");
        if !closure.is_zero() && closure != module {
            return Ok(Some(qt.pullback(&closure)));
        }
        Ok(None)
    };

    for pattern in probe_patterns(d, cfg.pattern_cap) {
        let mut coords = vec![Rat::zero(); d];
        for (pos, val) in pattern {
            coords[pos] = rat_i(val);
        }
        if let Some(hit) = spin(&coords)? {
            return Ok(Some(hit));
        }
    }

    if d <= cfg.minpoly_dim_cap {
        for x in 0..qt.algebra.dim() {
            let t = restricted_action(&qt.algebra, x, &module);
            if t.is_zero() {
                continue;
            }
            for factor in min_poly(&t).factors_deg_le2() {
                let image = factor.eval_matrix(&t);
                let kernel = Subspace::kernel_of(&image);
                if kernel.is_zero() || kernel.is_full() {
                    continue;
                }
                // try the whole kernel, then each kernel line
                let mut candidates: Vec<Vec<Rat>> =
                    kernel.basis_rows().map(|r| r.to_vec()).collect();
                let whole = Subspace::span(
                    qt.algebra.dim(),
                    kernel.basis_rows().map(|r| from_coords(&module, r)),
                );
                let closure = qt.algebra.ideal_closure(&whole)?;
                if !closure.is_zero() && closure != module && closure.leq(&module).unwrap() {
                    return Ok(Some(qt.pullback(&closure)));
                }
                for cand in candidates.drain(..) {
                    if let Some(hit) = spin(&cand)? {
                        return Ok(Some(hit));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Deterministic list of probe patterns: (position, value) pairs with values
/// in -2..=2, at most three nonzero coordinates, primitive up to scaling.
fn probe_patterns(d: usize, cap: usize) -> Vec<Vec<(usize, i64)>> {
    let mut out = Vec::new();
    for i in 0..d {
        out.push(vec![(i, 1)]);
    }
    const PAIR_VALUES: [(i64, i64); 6] = [(1, 1), (1, -1), (1, 2), (1, -2), (2, 1), (2, -1)];
    'outer2: for i in 0..d {
        for j in i + 1..d {
            for (a, b) in PAIR_VALUES {
                out.push(vec![(i, a), (j, b)]);
                if out.len() >= cap {
                    break 'outer2;
                }
            }
        }
    }
    const VALS: [i64; 4] = [1, -1, 2, -2];
    'outer3: for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                for a in [1i64, 2] {
                    for b in VALS {
                        for c in VALS {
                            if a == 2 && b % 2 == 0 && c % 2 == 0 {
                                continue; // not primitive
                            }
                            out.push(vec![(i, a), (j, b), (k, c)]);
                            if out.len() >= cap {
                                break 'outer3;
                            }
                        }
                    }
                }
            }
        }
    }
    out.truncate(cap.max(d));
    out
}

/// Scans every quotient by a member for two disjoint abelian atoms of the
/// projected family joined by an invertible commuting map. Such a map is a
/// certificate of infinitely many ideals regardless of how complete the
/// candidate family is.
pub fn detect_infinite(l: &LieAlgebra, set: &BTreeSet<Subspace>) -> Option<PencilWitness> {
    for modulus in set {
        if modulus.is_full() {
            continue;
        }
        let Ok(qt) = l.quotient(modulus) else { continue };
        let qn = qt.algebra.dim();
        let mut projected: BTreeSet<Subspace> = BTreeSet::new();
        for j in set {
            if modulus.leq(j).unwrap_or(false) {
                projected.insert(qt.project_space(j));
            }
        }
        projected.remove(&Subspace::zero(qn));
        let atoms: Vec<&Subspace> = projected
            .iter()
            .filter(|cand| {
                !projected.iter().any(|o| {
                    !o.is_zero() && o != *cand && o.leq(cand).unwrap_or(false)
                })
            })
            .collect();
        for (ai, p_bar) in atoms.iter().enumerate() {
            for q_bar in atoms.iter().skip(ai + 1) {
                if p_bar.dim() != q_bar.dim() {
                    continue;
                }
                if !p_bar.intersect(q_bar).unwrap().is_zero() {
                    continue;
                }
                let abelian = |s: &Subspace| {
                    qt.algebra.bracket_spaces(s, s).map(|b| b.is_zero()).unwrap_or(false)
                };
                if !abelian(p_bar) || !abelian(q_bar) {
                    continue;
                }
                let a_mats: Vec<Matrix> =
                    (0..qn).map(|x| restricted_action(&qt.algebra, x, p_bar)).collect();
                let b_mats: Vec<Matrix> =
                    (0..qn).map(|x| restricted_action(&qt.algebra, x, q_bar)).collect();
                let space = intertwiner_space(&a_mats, &b_mats);
                if let Some(phi) = invertible_in_span(&space) {
                    return Some(PencilWitness {
                        modulus: modulus.clone(),
                        p: qt.pullback(p_bar),
                        q: qt.pullback(q_bar),
                        phi,
                        p_bar: (*p_bar).clone(),
                        q_bar: (*q_bar).clone(),
                    });
                }
            }
        }
    }
    None
}

/// Socle data read off a completed enumeration.
#[derive(Debug, Clone)]
pub struct SocleReport {
    pub minimal_ideals: Vec<Subspace>,
    pub asoc: Subspace,
    pub ssoc: Subspace,
    pub soc: Subspace,
    pub frattini_trivial: bool,
}

pub fn socle_report(l: &LieAlgebra, ids: &IdealSet) -> Result<SocleReport> {
    if !ids.is_complete() {
        return Err(Error::NotComplete("socle requires a complete enumeration".into()));
    }
    let atoms: Vec<Subspace> = ids
        .ideals
        .iter()
        .filter(|m| {
            !m.is_zero()
                && !ids.ideals.iter().any(|o| {
                    !o.is_zero() && o != *m && o.leq(m).unwrap_or(false)
                })
        })
        .cloned()
        .collect();
    let mut asoc = l.zero_space();
    let mut ssoc = l.zero_space();
    for a in &atoms {
        if l.bracket_spaces(a, a)?.is_zero() {
            asoc = asoc.sum(a)?;
        } else {
            ssoc = ssoc.sum(a)?;
        }
    }
    assert!(asoc.intersect(&ssoc)?.is_zero(), "socle summands must be disjoint");
    let soc = asoc.sum(&ssoc)?;
    let jac = l.jacobson_radical();
    let frattini_trivial = jac.leq(&asoc)? && jac.intersect(&l.center())?.is_zero();
    Ok(SocleReport { minimal_ideals: atoms, asoc, ssoc, soc, frattini_trivial })
}

/// Faithful means no simple ideals.
pub fn is_faithful(l: &LieAlgebra, ids: &IdealSet) -> Result<bool> {
    Ok(socle_report(l, ids)?.ssoc.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{empty_constants, set_bracket};

    fn sl2() -> LieAlgebra {
        let mut c = empty_constants(3);
        set_bracket(&mut c, 2, 0, &[rat_i(2), rat_i(0), rat_i(0)]);
        set_bracket(&mut c, 2, 1, &[rat_i(0), rat_i(-2), rat_i(0)]);
        set_bracket(&mut c, 0, 1, &[rat_i(0), rat_i(0), rat_i(1)]);
        LieAlgebra::new(vec!["e".into(), "f".into(), "h".into()], c).unwrap()
    }

    /// sl2 acting on V(2) (adjoint-sized irreducible module), abelian radical.
    fn sl2_v2() -> LieAlgebra {
        crate::families::FamilySpec::bi(
            vec![crate::families::SimpleKind::Sl(2)],
            vec![vec![2]],
        )
        .build()
        .unwrap()
    }

    fn sp(ambient: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::span(
            ambient,
            rows.iter().map(|r| r.iter().map(|&x| rat_i(x)).collect::<Vec<_>>()),
        )
    }

    #[test]
    fn abelian_line_is_complete() {
        let ids = enumerate_ideals(&LieAlgebra::abelian(1), 16).unwrap();
        assert!(ids.is_complete());
        assert_eq!(ids.len(), 2);
    }

    #[test]
    fn abelian_plane_is_infinite() {
        let ids = enumerate_ideals(&LieAlgebra::abelian(2), 64).unwrap();
        let w = ids.witness().expect("pencil fires on two isomorphic trivial atoms");
        let l = LieAlgebra::abelian(2);
        let mut seen = BTreeSet::new();
        for alpha in 0..5 {
            let ideal = w.pencil_ideal(&l, &rat_i(alpha)).unwrap();
            assert!(l.is_ideal(&ideal).unwrap());
            assert!(seen.insert(ideal));
        }
    }

    #[test]
    fn heisenberg_is_infinite() {
        let l = LieAlgebra::heisenberg3();
        let ids = enumerate_ideals(&l, 64).unwrap();
        let w = ids.witness().expect("pencil in the quotient by the centre");
        let mut seen = BTreeSet::new();
        for alpha in 0..5 {
            let ideal = w.pencil_ideal(&l, &rat_i(alpha)).unwrap();
            assert!(l.is_ideal(&ideal).unwrap());
            assert!(seen.insert(ideal));
        }
    }

    #[test]
    fn sl2_two_element_chain() {
        let ids = enumerate_ideals(&sl2(), 16).unwrap();
        assert!(ids.is_complete());
        assert_eq!(ids.len(), 2);
    }

    #[test]
    fn sl2_module_three_chain() {
        let l = sl2_v2();
        let ids = enumerate_ideals(&l, 32).unwrap();
        assert!(ids.is_complete());
        assert_eq!(ids.len(), 3);
        // middle element is the module
        let mid: Vec<_> =
            ids.ideals.iter().filter(|s| !s.is_zero() && !s.is_full()).collect();
        assert_eq!(mid.len(), 1);
        assert_eq!(mid[0].dim(), 3);
    }

    #[test]
    fn direct_sum_of_simples_is_boolean_count() {
        let l = sl2().direct_sum(&sl2());
        let ids = enumerate_ideals(&l, 32).unwrap();
        assert!(ids.is_complete());
        assert_eq!(ids.len(), 4);
    }

    #[test]
    fn cover_probe_examples() {
        let cfg = ProbeConfig::default();
        // sl2 is simple: nothing strictly between 0 and L
        let l = sl2();
        assert!(cover_probe(&l, &l.zero_space(), &l.full_space(), &cfg).unwrap().is_none());
        // heisenberg3, pre-refinement cover z < L: x spans an invariant line mod z
        let h = LieAlgebra::heisenberg3();
        let z = sp(3, &[&[0, 0, 1]]);
        let hit = cover_probe(&h, &z, &h.full_space(), &cfg).unwrap().expect("finds a line");
        assert_eq!(hit.dim(), 2);
        assert!(h.is_ideal(&hit).unwrap());
        // one-dimensional cover quotients have no proper nonzero subspace
        assert!(cover_probe(&h, &h.zero_space(), &z, &cfg).unwrap().is_none());
    }

    #[test]
    fn budget_exceeded() {
        let l = sl2().direct_sum(&sl2());
        let ids = enumerate_ideals(&l, 3).unwrap();
        assert!(matches!(ids.status, Status::BudgetExceeded));
        assert!(enumerate_ideals(&l, 1).is_err());
    }

    #[test]
    fn socle_of_semisimple_sum() {
        let l = sl2().direct_sum(&sl2());
        let ids = enumerate_ideals(&l, 32).unwrap();
        let soc = socle_report(&l, &ids).unwrap();
        assert_eq!(soc.minimal_ideals.len(), 2);
        assert!(soc.asoc.is_zero());
        assert!(soc.ssoc.is_full());
        assert!(soc.frattini_trivial);
        assert!(!is_faithful(&l, &ids).unwrap());
    }

    #[test]
    fn socle_of_sl2_module() {
        let l = sl2_v2();
        let ids = enumerate_ideals(&l, 32).unwrap();
        let soc = socle_report(&l, &ids).unwrap();
        assert_eq!(soc.minimal_ideals.len(), 1);
        assert_eq!(soc.asoc.dim(), 3);
        assert_eq!(soc.asoc, l.jacobson_radical());
        assert!(soc.frattini_trivial);
        assert!(is_faithful(&l, &ids).unwrap());
        // abelian(1) is trivially faithful: no simple ideals
        let a = LieAlgebra::abelian(1);
        let ids = enumerate_ideals(&a, 8).unwrap();
        assert!(is_faithful(&a, &ids).unwrap());
    }

    #[test]
    fn no_pencil_across_nonisomorphic_modules() {
        // sl2 acting on V(2) + V(4): dimensions differ, no invertible map
        let l = crate::families::FamilySpec::bi(
            vec![crate::families::SimpleKind::Sl(2)],
            vec![vec![2], vec![4]],
        )
        .build()
        .unwrap();
        let ids = enumerate_ideals(&l, 64).unwrap();
        assert!(ids.is_complete());
        assert_eq!(ids.len(), 5);
    }

    #[test]
    fn socle_requires_complete() {
        let l = LieAlgebra::abelian(2);
        let ids = enumerate_ideals(&l, 64).unwrap();
        assert!(socle_report(&l, &ids).is_err());
    }
}
