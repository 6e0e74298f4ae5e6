//! Constructors for the classified trivial-Frattini families, together with
//! closed-form predictions of their ideal lattices.
//!
//! The families are, in the labeling used throughout this crate:
//!
//! * `A`: the zero algebra or a one-dimensional centre line.
//! * `Simple` / `SemisimpleSum`: simple algebras and direct sums of them.
//! * `BI`: `S (+) A` with `S` semisimple and `A` an abelian ideal splitting
//!   into pairwise non-isomorphic nontrivial irreducible `S`-modules.
//! * `BII`: a `BI` algebra plus a one-dimensional centre.
//! * `BIII`: `S (+) A (+) Fa` with `a` centralizing `S` and acting
//!   semisimply on `A` with squarefree minimal polynomial.
//! * `C`: `A (+) Fa` solvable, `a` acting cyclically on each primary block.
//! * `D`: a semisimple sum of simple ideals plus any of the above.
//!
//! Every builder produces explicit structure constants (validated on
//! construction), and `predict` enumerates the ideals symbolically, giving
//! an independent oracle for the generic enumeration machinery.
//!
//! Concrete stand-ins: abstract simple factors are realized as sl(k) from
//! the elementary-matrix basis, and irreducible sl2-modules as the standard
//! highest-weight modules V(m) with integral raising/lowering coefficients.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::lie::{empty_constants, set_bracket, LieAlgebra};
use crate::matrix::{intertwiner_space, invertible_in_span, Matrix};
use crate::poly::Poly;
use crate::rat::{rat_i, Rat};
use crate::subspace::Subspace;

/// Supported simple factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimpleKind {
    Sl(u32),
}

impl SimpleKind {
    pub fn dim(&self) -> usize {
        let SimpleKind::Sl(k) = *self;
        (k * k - 1) as usize
    }
}

impl Serialize for SimpleKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let SimpleKind::Sl(k) = self;
        s.serialize_str(&format!("sl{k}"))
    }
}

impl<'de> Deserialize<'de> for SimpleKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let k = s
            .strip_prefix("sl")
            .and_then(|t| t.parse::<u32>().ok())
            .filter(|&k| k >= 2)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown simple kind {s:?}")))?;
        Ok(SimpleKind::Sl(k))
    }
}

/// One irreducible block of the abelian part of a `BIII` algebra: an
/// irreducible S-module (by highest weights per factor) on which the
/// distinguished element acts through the companion matrix of `poly`
/// (`poly = t` meaning the zero action).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiiiBlock {
    pub weights: Vec<u32>,
    pub poly: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum FamilySpec {
    #[serde(rename = "A")]
    A { center: bool },
    #[serde(rename = "simple")]
    Simple { kind: SimpleKind },
    #[serde(rename = "semisimple")]
    SemisimpleSum { factors: Vec<SimpleKind> },
    #[serde(rename = "BI")]
    BI { simples: Vec<SimpleKind>, modules: Vec<Vec<u32>> },
    #[serde(rename = "BII")]
    BII { inner: Box<FamilySpec> },
    #[serde(rename = "BIII")]
    BIII { simples: Vec<SimpleKind>, a0_polys: Vec<Poly>, a1_blocks: Vec<BiiiBlock> },
    #[serde(rename = "C")]
    C { polys: Vec<Poly> },
    #[serde(rename = "D")]
    D { factors: Vec<SimpleKind>, inner: Box<FamilySpec> },
}

/// Coordinate layout of a built family: where the simple factors, the
/// abelian blocks, and the distinguished line (a or z) live.
#[derive(Debug, Clone)]
pub struct Layout {
    pub simple_ranges: Vec<std::ops::Range<usize>>,
    pub block_ranges: Vec<std::ops::Range<usize>>,
    pub extra: Option<usize>,
    pub dim: usize,
}

/// Symbolic prediction of the ideal lattice.
#[derive(Debug, Clone)]
pub struct Prediction {
    /// Exact node count from the symbolic enumeration.
    pub ideal_count: u64,
    /// Stated lower/upper bounds where the classification gives an interval
    /// (`BI` and `BIII`).
    pub bounds: Option<(u64, u64)>,
    /// Exact closed-form count where one exists (all other variants).
    pub formula_count: Option<u64>,
    pub lattice: FiniteLattice,
    /// One basis per predicted ideal, in build coordinates, sorted.
    pub ideal_bases: Vec<Subspace>,
}

/// sl(k) on the elementary-matrix basis: off-diagonal E_ij (upper then
/// lower, lexicographic), then the Cartan differences H_i. For k = 2 the
/// basis is named (e, f, h).
pub fn sl(k: u32) -> LieAlgebra {
    assert!(k >= 2, "sl(k) needs k >= 2");
    let k = k as usize;
    let mut units: Vec<(usize, usize)> = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i < j {
                units.push((i, j));
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            if i > j {
                units.push((i, j));
            }
        }
    }
    let n = k * k - 1;
    let as_matrix = |idx: usize| -> Matrix {
        let mut m = Matrix::zero(k, k);
        if idx < units.len() {
            let (i, j) = units[idx];
            m[(i, j)] = Rat::one();
        } else {
            let a = idx - units.len();
            m[(a, a)] = Rat::one();
            m[(a + 1, a + 1)] = -Rat::one();
        }
        m
    };
    // traceless matrix -> basis coordinates
    let coords = |m: &Matrix| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); n];
        for (idx, &(i, j)) in units.iter().enumerate() {
            v[idx] = m[(i, j)].clone();
        }
        let mut acc = Rat::zero();
        for a in 0..k - 1 {
            acc += &m[(a, a)];
            v[units.len() + a] = acc.clone();
        }
        v
    };
    let mut c = empty_constants(n);
    for x in 0..n {
        for y in x + 1..n {
            let (mx, my) = (as_matrix(x), as_matrix(y));
            let comm = mx.mul(&my).unwrap().add(&my.mul(&mx).unwrap().scale(&rat_i(-1))).unwrap();
            set_bracket(&mut c, x, y, &coords(&comm));
        }
    }
    let names: Vec<String> = if k == 2 {
        vec!["e".into(), "f".into(), "h".into()]
    } else {
        let mut names: Vec<String> =
            units.iter().map(|&(i, j)| format!("E{}{}", i + 1, j + 1)).collect();
        names.extend((1..k).map(|a| format!("H{a}")));
        names
    };
    LieAlgebra::new(names, c).expect("sl(k) satisfies the axioms")
}

pub fn sl2() -> LieAlgebra {
    sl(2)
}

fn semisimple_sum(factors: &[SimpleKind]) -> LieAlgebra {
    let mut acc = LieAlgebra::abelian(0);
    for f in factors {
        let SimpleKind::Sl(k) = *f;
        acc = acc.direct_sum(&sl(k));
    }
    acc
}

/// Action matrices of the sl2 generators (e, f, h) on the highest-weight
/// module V(m): h v_i = (m - 2i) v_i, f v_i = v_{i+1}, e v_i = i(m-i+1) v_{i-1}.
fn sl2_module_mats(m: u32) -> [Matrix; 3] {
    let d = (m + 1) as usize;
    let mut e = Matrix::zero(d, d);
    let mut f = Matrix::zero(d, d);
    let mut h = Matrix::zero(d, d);
    for i in 0..d {
        let iw = i as i64;
        let mw = m as i64;
        h[(i, i)] = rat_i(mw - 2 * iw);
        if i + 1 < d {
            f[(i + 1, i)] = Rat::one();
        }
        if i >= 1 {
            e[(i - 1, i)] = rat_i(iw * (mw - iw + 1));
        }
    }
    [e, f, h]
}

/// Matrices of every basis element of the semisimple sum acting on the
/// tensor module with the given highest weights (one weight per factor;
/// weight 0 is the trivial module, required for factors other than sl2).
fn module_rep(simples: &[SimpleKind], weights: &[u32]) -> Result<Vec<Matrix>> {
    if weights.len() != simples.len() {
        return Err(Error::InvalidSpec(format!(
            "module lists {} weights for {} simple factors",
            weights.len(),
            simples.len()
        )));
    }
    let mut local: Vec<Vec<Matrix>> = Vec::new();
    let mut dims: Vec<usize> = Vec::new();
    for (kind, &w) in simples.iter().zip(weights) {
        let SimpleKind::Sl(k) = *kind;
        if w == 0 {
            local.push(vec![Matrix::zero(1, 1); kind.dim()]);
            dims.push(1);
        } else if k == 2 {
            let [e, f, h] = sl2_module_mats(w);
            local.push(vec![e, f, h]);
            dims.push((w + 1) as usize);
        } else {
            return Err(Error::InvalidSpec(format!(
                "nontrivial modules are only constructed over sl2 factors (got sl{k} with weight {w})"
            )));
        }
    }
    let mut out = Vec::new();
    for (t, mats) in local.iter().enumerate() {
        for g in mats {
            // I (x) ... (x) g (x) ... (x) I, slot t
            let mut big = Matrix::identity(1);
            for (s, &d) in dims.iter().enumerate() {
                let factor = if s == t { g.clone() } else { Matrix::identity(d) };
                big = big.kron(&factor);
            }
            out.push(big);
        }
    }
    Ok(out)
}

fn module_dim(simples: &[SimpleKind], weights: &[u32]) -> usize {
    simples
        .iter()
        .zip(weights)
        .map(|(kind, &w)| {
            let SimpleKind::Sl(_) = kind;
            if w == 0 {
                1
            } else {
                (w + 1) as usize
            }
        })
        .product()
}

fn is_poly_t(p: &Poly) -> bool {
    p.monic() == Poly::t()
}

/// Matrix of the distinguished element acting on one `BIII` block.
fn block_a_action(block: &BiiiBlock, base_dim: usize) -> Matrix {
    let p = block.poly.monic();
    if is_poly_t(&p) {
        Matrix::zero(base_dim, base_dim)
    } else if p.degree() == Some(1) {
        let lambda = -p.coeffs()[0].clone();
        Matrix::identity(base_dim).scale(&lambda)
    } else {
        Matrix::identity(base_dim).kron(&p.companion())
    }
}

fn block_dim(block: &BiiiBlock, simples: &[SimpleKind]) -> usize {
    let base = module_dim(simples, &block.weights);
    let p = block.poly.monic();
    match p.degree() {
        Some(d) if d >= 2 && !is_poly_t(&p) => base * d,
        _ => base,
    }
}

impl FamilySpec {
    pub fn bi(simples: Vec<SimpleKind>, modules: Vec<Vec<u32>>) -> FamilySpec {
        FamilySpec::BI { simples, modules }
    }

    pub fn bii(inner: FamilySpec) -> FamilySpec {
        FamilySpec::BII { inner: Box::new(inner) }
    }

    pub fn biii(
        simples: Vec<SimpleKind>,
        a0_polys: Vec<Poly>,
        a1_blocks: Vec<(Vec<u32>, Poly)>,
    ) -> FamilySpec {
        FamilySpec::BIII {
            simples,
            a0_polys,
            a1_blocks: a1_blocks
                .into_iter()
                .map(|(weights, poly)| BiiiBlock { weights, poly })
                .collect(),
        }
    }

    pub fn c(polys: Vec<Poly>) -> FamilySpec {
        FamilySpec::C { polys }
    }

    pub fn d(factors: Vec<SimpleKind>, inner: FamilySpec) -> FamilySpec {
        FamilySpec::D { factors, inner: Box::new(inner) }
    }

    pub fn semisimple(factors: Vec<SimpleKind>) -> FamilySpec {
        FamilySpec::SemisimpleSum { factors }
    }

    /// Validates the spec invariants; returns warnings for conditions that
    /// are accepted but not fully certified (irreducibility of descriptors
    /// of degree three or more).
    pub fn validate(&self) -> Result<Vec<String>> {
        let mut warnings = Vec::new();
        match self {
            FamilySpec::A { .. } | FamilySpec::Simple { .. } | FamilySpec::SemisimpleSum { .. } => {}
            FamilySpec::BI { simples, modules } => {
                if simples.is_empty() || modules.is_empty() {
                    return Err(Error::InvalidSpec(
                        "BI needs at least one simple factor and one module".into(),
                    ));
                }
                for m in modules {
                    if module_dim_checked(simples, m)? == 1 {
                        return Err(Error::InvalidSpec(
                            "BI modules must be nontrivial".into(),
                        ));
                    }
                }
                check_modules_nonisomorphic(simples, modules)?;
                for (i, _) in simples.iter().enumerate() {
                    if modules.iter().all(|m| m[i] == 0) {
                        return Err(Error::InvalidSpec(format!(
                            "simple factor {i} acts trivially on every module (a simple ideal)"
                        )));
                    }
                }
            }
            FamilySpec::BII { inner } => {
                if !matches!(**inner, FamilySpec::BI { .. }) {
                    return Err(Error::InvalidSpec("BII wraps a BI algebra".into()));
                }
                warnings.extend(inner.validate()?);
            }
            FamilySpec::BIII { simples, a0_polys, a1_blocks } => {
                if simples.is_empty() {
                    return Err(Error::InvalidSpec("BIII needs a nonzero semisimple part".into()));
                }
                if a1_blocks.is_empty() {
                    return Err(Error::InvalidSpec("BIII needs A1 nonzero".into()));
                }
                let mut seen = BTreeSet::new();
                for p in a0_polys {
                    let m = p.monic();
                    if is_poly_t(&m) {
                        return Err(Error::InvalidSpec("A0 components must avoid pi = t".into()));
                    }
                    warnings.extend(check_irreducible(&m)?);
                    if !seen.insert(m) {
                        return Err(Error::InvalidSpec("A0 primary components must be distinct".into()));
                    }
                }
                let mut seen_blocks = BTreeSet::new();
                for b in a1_blocks {
                    if module_dim_checked(simples, &b.weights)? == 1 {
                        return Err(Error::InvalidSpec("A1 blocks must be nontrivial S-modules".into()));
                    }
                    let m = b.poly.monic();
                    if !is_poly_t(&m) {
                        warnings.extend(check_irreducible(&m)?);
                    }
                    if !seen_blocks.insert((b.weights.clone(), m)) {
                        return Err(Error::InvalidSpec(
                            "A1 blocks must be pairwise non-isomorphic".into(),
                        ));
                    }
                }
                if a0_polys.is_empty() && a1_blocks.iter().all(|b| is_poly_t(&b.poly)) {
                    return Err(Error::InvalidSpec(
                        "the distinguished element would be central (all pi = t)".into(),
                    ));
                }
                for (i, _) in simples.iter().enumerate() {
                    if a1_blocks.iter().all(|b| b.weights[i] == 0) {
                        return Err(Error::InvalidSpec(format!(
                            "simple factor {i} acts trivially on every block (a simple ideal)"
                        )));
                    }
                }
            }
            FamilySpec::C { polys } => {
                if polys.is_empty() {
                    return Err(Error::InvalidSpec("C needs at least one primary block".into()));
                }
                let mut seen = BTreeSet::new();
                for p in polys {
                    let m = p.monic();
                    if is_poly_t(&m) {
                        return Err(Error::InvalidSpec("C components must avoid pi = t".into()));
                    }
                    warnings.extend(check_irreducible(&m)?);
                    if !seen.insert(m) {
                        return Err(Error::InvalidSpec("C primary components must be distinct".into()));
                    }
                }
            }
            FamilySpec::D { factors, inner } => {
                if factors.is_empty() {
                    return Err(Error::InvalidSpec("D needs at least one simple ideal".into()));
                }
                match **inner {
                    FamilySpec::A { .. }
                    | FamilySpec::BI { .. }
                    | FamilySpec::BII { .. }
                    | FamilySpec::BIII { .. }
                    | FamilySpec::C { .. } => warnings.extend(inner.validate()?),
                    _ => {
                        return Err(Error::InvalidSpec(
                            "D wraps a family of type A, BI, BII, BIII or C".into(),
                        ))
                    }
                }
            }
        }
        Ok(warnings)
    }

    /// Coordinate layout of the built algebra.
    pub fn layout(&self) -> Layout {
        match self {
            FamilySpec::A { center: false } => {
                Layout { simple_ranges: vec![], block_ranges: vec![], extra: None, dim: 0 }
            }
            FamilySpec::A { center: true } => {
                Layout { simple_ranges: vec![], block_ranges: vec![], extra: Some(0), dim: 1 }
            }
            FamilySpec::Simple { kind } => Layout {
                simple_ranges: vec![0..kind.dim()],
                block_ranges: vec![],
                extra: None,
                dim: kind.dim(),
            },
            FamilySpec::SemisimpleSum { factors } => {
                let mut at = 0;
                let simple_ranges = factors
                    .iter()
                    .map(|f| {
                        let r = at..at + f.dim();
                        at += f.dim();
                        r
                    })
                    .collect();
                Layout { simple_ranges, block_ranges: vec![], extra: None, dim: at }
            }
            FamilySpec::BI { simples, modules } => {
                let mut at = 0;
                let simple_ranges: Vec<_> = simples
                    .iter()
                    .map(|f| {
                        let r = at..at + f.dim();
                        at += f.dim();
                        r
                    })
                    .collect();
                let block_ranges = modules
                    .iter()
                    .map(|m| {
                        let d = module_dim(simples, m);
                        let r = at..at + d;
                        at += d;
                        r
                    })
                    .collect();
                Layout { simple_ranges, block_ranges, extra: None, dim: at }
            }
            FamilySpec::BII { inner } => {
                let mut l = inner.layout();
                l.extra = Some(l.dim);
                l.dim += 1;
                l
            }
            FamilySpec::BIII { simples, a0_polys, a1_blocks } => {
                let mut at = 0;
                let simple_ranges: Vec<_> = simples
                    .iter()
                    .map(|f| {
                        let r = at..at + f.dim();
                        at += f.dim();
                        r
                    })
                    .collect();
                let mut block_ranges = Vec::new();
                for p in a0_polys {
                    let d = p.monic().degree().unwrap_or(1);
                    block_ranges.push(at..at + d);
                    at += d;
                }
                for b in a1_blocks {
                    let d = block_dim(b, simples);
                    block_ranges.push(at..at + d);
                    at += d;
                }
                Layout { simple_ranges, block_ranges, extra: Some(at), dim: at + 1 }
            }
            FamilySpec::C { polys } => {
                let mut at = 0;
                let block_ranges = polys
                    .iter()
                    .map(|p| {
                        let d = p.monic().degree().unwrap_or(1);
                        let r = at..at + d;
                        at += d;
                        r
                    })
                    .collect();
                Layout { simple_ranges: vec![], block_ranges, extra: Some(at), dim: at + 1 }
            }
            FamilySpec::D { factors, inner } => {
                let mut at = 0;
                let mut simple_ranges: Vec<_> = factors
                    .iter()
                    .map(|f| {
                        let r = at..at + f.dim();
                        at += f.dim();
                        r
                    })
                    .collect();
                let il = inner.layout();
                let shift = at;
                simple_ranges.extend(il.simple_ranges.iter().map(|r| r.start + shift..r.end + shift));
                let block_ranges =
                    il.block_ranges.iter().map(|r| r.start + shift..r.end + shift).collect();
                Layout {
                    simple_ranges,
                    block_ranges,
                    extra: il.extra.map(|e| e + shift),
                    dim: shift + il.dim,
                }
            }
        }
    }

    /// Builds the algebra. Structure constants are validated on construction
    /// and the solvable radical is re-derived and checked against the layout.
    pub fn build(&self) -> Result<LieAlgebra> {
        self.validate()?;
        let alg = self.assemble()?;
        let layout = self.layout();
        // the radical must be exactly the non-semisimple coordinates
        let rad_coords: Vec<usize> = (0..layout.dim)
            .filter(|i| !layout.simple_ranges.iter().any(|r| r.contains(i)))
            .collect();
        let intended = Subspace::span(
            layout.dim,
            rad_coords.iter().map(|&i| {
                let mut v = vec![Rat::zero(); layout.dim];
                v[i] = Rat::one();
                v
            }),
        );
        assert_eq!(
            alg.solvable_radical(),
            intended,
            "built radical does not match the layout"
        );
        Ok(alg)
    }

    fn assemble(&self) -> Result<LieAlgebra> {
        match self {
            FamilySpec::A { center: false } => Ok(LieAlgebra::abelian(0)),
            FamilySpec::A { center: true } => {
                Ok(LieAlgebra::new(vec!["z".into()], empty_constants(1)).unwrap())
            }
            FamilySpec::Simple { kind } => {
                let SimpleKind::Sl(k) = kind;
                Ok(sl(*k))
            }
            FamilySpec::SemisimpleSum { factors } => Ok(semisimple_sum(factors)),
            FamilySpec::BI { simples, modules } => {
                let s_alg = semisimple_sum(simples);
                let reps = modules
                    .iter()
                    .map(|m| module_rep(simples, m))
                    .collect::<Result<Vec<_>>>()?;
                let a_actions: Vec<Option<Matrix>> = vec![None; modules.len()];
                assemble_split(&s_alg, &reps, &a_actions, false)
            }
            FamilySpec::BII { inner } => {
                let m = inner.assemble()?;
                let z = LieAlgebra::new(vec!["z".into()], empty_constants(1)).unwrap();
                Ok(m.direct_sum(&z))
            }
            FamilySpec::BIII { simples, a0_polys, a1_blocks } => {
                let s_alg = semisimple_sum(simples);
                let mut reps = Vec::new();
                let mut a_actions = Vec::new();
                for p in a0_polys {
                    let d = p.monic().degree().unwrap_or(1);
                    reps.push(vec![Matrix::zero(d, d); s_alg.dim()]);
                    a_actions.push(Some(p.monic().companion()));
                }
                for b in a1_blocks {
                    let base = module_rep(simples, &b.weights)?;
                    let base_dim = base.first().map_or(1, Matrix::rows);
                    let p = b.poly.monic();
                    if p.degree() >= Some(2) && !is_poly_t(&p) {
                        let d2 = p.degree().unwrap();
                        reps.push(
                            base.iter().map(|g| g.kron(&Matrix::identity(d2))).collect(),
                        );
                    } else {
                        reps.push(base);
                    }
                    a_actions.push(Some(block_a_action(b, base_dim)));
                }
                assemble_split(&s_alg, &reps, &a_actions, true)
            }
            FamilySpec::C { polys } => {
                let s_alg = LieAlgebra::abelian(0);
                let reps = vec![Vec::new(); polys.len()];
                let a_actions =
                    polys.iter().map(|p| Some(p.monic().companion())).collect::<Vec<_>>();
                assemble_split(&s_alg, &reps, &a_actions, true)
            }
            FamilySpec::D { factors, inner } => {
                Ok(semisimple_sum(factors).direct_sum(&inner.assemble()?))
            }
        }
    }

    /// Symbolic ideal enumeration: exact count, stated bounds where the
    /// classification gives an interval, the predicted lattice, and explicit
    /// bases in build coordinates.
    pub fn predict(&self) -> Result<Prediction> {
        self.validate()?;
        let layout = self.layout();
        let syms = self.symbolic_ideals();
        let mut bases: Vec<(Subspace, Sym)> = syms
            .into_iter()
            .map(|sym| (sym.to_subspace(&layout), sym))
            .collect();
        bases.sort_by(|a, b| (a.0.dim(), &a.0).cmp(&(b.0.dim(), &b.0)));
        let n = bases.len();
        let mut labels = Vec::with_capacity(n);
        let mut per_dim = std::collections::BTreeMap::new();
        for (s, _) in &bases {
            let k = per_dim.entry(s.dim()).or_insert(0usize);
            labels.push(format!("d{}.{}", s.dim(), k));
            *k += 1;
        }
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                leq[i][j] = bases[i].1.leq(&bases[j].1);
            }
        }
        let lattice = FiniteLattice::from_order(labels, leq)?;
        let ideal_count = n as u64;
        let (bounds, formula_count) = self.count_forms()?;
        if let Some((lo, hi)) = bounds {
            assert!(
                (lo..=hi).contains(&ideal_count),
                "symbolic count {ideal_count} outside stated bounds [{lo}, {hi}]"
            );
        }
        if let Some(f) = formula_count {
            assert_eq!(f, ideal_count, "closed-form count disagrees with symbolic enumeration");
        }
        Ok(Prediction {
            ideal_count,
            bounds,
            formula_count,
            lattice,
            ideal_bases: bases.into_iter().map(|(s, _)| s).collect(),
        })
    }

    fn count_forms(&self) -> Result<(Option<(u64, u64)>, Option<u64>)> {
        Ok(match self {
            FamilySpec::A { center } => (None, Some(if *center { 2 } else { 1 })),
            FamilySpec::Simple { .. } => (None, Some(2)),
            FamilySpec::SemisimpleSum { factors } => (None, Some(1 << factors.len())),
            FamilySpec::BI { simples, modules } => {
                let l = simples.len() as u32;
                let k = modules.len() as u32;
                let lo = (1u64 << l) + (1u64 << k) - 1;
                let hi = (1u64 << (l + k)) + 3 - (1u64 << l) - (1u64 << k);
                (Some((lo, hi)), None)
            }
            FamilySpec::BII { inner } => {
                let inner_count = inner.predict()?.ideal_count;
                (None, Some(2 * inner_count))
            }
            FamilySpec::BIII { simples, a0_polys, a1_blocks } => {
                let l = simples.len() as u32;
                let s = a0_polys.len() as u32;
                let k = a1_blocks.len() as u32;
                let k0 = a1_blocks.iter().filter(|b| is_poly_t(&b.poly)).count() as u32;
                let lo = (1u64 << (l + 1)) + (1u64 << (s + k)) + (1u64 << k0) - 2;
                let hi = ((1u64 << l) - 1) * ((1u64 << (s + k)) + (1u64 << k0) + (1u64 << s) - 1)
                    + 2;
                (Some((lo, hi)), None)
            }
            FamilySpec::C { polys } => (None, Some((1 << polys.len()) + 1)),
            FamilySpec::D { factors, inner } => {
                let inner_count = inner.predict()?.ideal_count;
                (None, Some((1 << factors.len()) * inner_count))
            }
        })
    }

    /// The ideals as subsets of (simple factors, blocks, distinguished line).
    fn symbolic_ideals(&self) -> Vec<Sym> {
        match self {
            FamilySpec::A { center: false } => vec![Sym::default()],
            FamilySpec::A { center: true } => {
                vec![Sym::default(), Sym { x: true, ..Sym::default() }]
            }
            FamilySpec::Simple { .. } => {
                vec![Sym::default(), Sym { s: BTreeSet::from([0]), ..Sym::default() }]
            }
            FamilySpec::SemisimpleSum { factors } => subsets(factors.len())
                .into_iter()
                .map(|s| Sym { s, ..Sym::default() })
                .collect(),
            FamilySpec::BI { simples, modules } => {
                let req = |sset: &BTreeSet<usize>| -> BTreeSet<usize> {
                    (0..modules.len())
                        .filter(|&m| sset.iter().any(|&i| modules[m][i] > 0))
                        .collect()
                };
                let mut out = Vec::new();
                for sset in subsets(simples.len()) {
                    let need = req(&sset);
                    for bset in subsets(modules.len()) {
                        if need.is_subset(&bset) {
                            out.push(Sym { s: sset.clone(), b: bset, x: false });
                        }
                    }
                }
                out
            }
            FamilySpec::BII { inner } => {
                let mut out = Vec::new();
                for sym in inner.symbolic_ideals() {
                    out.push(sym.clone());
                    out.push(Sym { x: true, ..sym });
                }
                out
            }
            FamilySpec::BIII { simples, a0_polys, a1_blocks } => {
                let s_count = a0_polys.len();
                let req = |sset: &BTreeSet<usize>| -> BTreeSet<usize> {
                    (0..a1_blocks.len())
                        .filter(|&m| sset.iter().any(|&i| a1_blocks[m].weights[i] > 0))
                        .map(|m| s_count + m)
                        .collect()
                };
                // blocks where the distinguished element acts invertibly
                let nonzero_pi: BTreeSet<usize> = (0..s_count)
                    .chain(
                        a1_blocks
                            .iter()
                            .enumerate()
                            .filter(|(_, b)| !is_poly_t(&b.poly))
                            .map(|(m, _)| s_count + m),
                    )
                    .collect();
                let total_blocks = s_count + a1_blocks.len();
                let mut out = Vec::new();
                for sset in subsets(simples.len()) {
                    let need = req(&sset);
                    for bset in subsets(total_blocks) {
                        if !need.is_subset(&bset) {
                            continue;
                        }
                        out.push(Sym { s: sset.clone(), b: bset.clone(), x: false });
                        if nonzero_pi.is_subset(&bset) {
                            out.push(Sym { s: sset.clone(), b: bset, x: true });
                        }
                    }
                }
                out
            }
            FamilySpec::C { polys } => {
                let mut out: Vec<Sym> = subsets(polys.len())
                    .into_iter()
                    .map(|b| Sym { b, ..Sym::default() })
                    .collect();
                out.push(Sym { b: (0..polys.len()).collect(), x: true, ..Sym::default() });
                out
            }
            FamilySpec::D { factors, inner } => {
                let p = factors.len();
                let mut out = Vec::new();
                for sset in subsets(p) {
                    for sym in inner.symbolic_ideals() {
                        let mut s: BTreeSet<usize> = sset.clone();
                        s.extend(sym.s.iter().map(|&i| i + p));
                        out.push(Sym { s, b: sym.b.clone(), x: sym.x });
                    }
                }
                out
            }
        }
    }
}

fn module_dim_checked(simples: &[SimpleKind], weights: &[u32]) -> Result<usize> {
    if weights.len() != simples.len() {
        return Err(Error::InvalidSpec(format!(
            "module lists {} weights for {} simple factors",
            weights.len(),
            simples.len()
        )));
    }
    for (kind, &w) in simples.iter().zip(weights) {
        let SimpleKind::Sl(k) = *kind;
        if w > 0 && k != 2 {
            return Err(Error::InvalidSpec(
                "nontrivial modules are only constructed over sl2 factors".into(),
            ));
        }
    }
    Ok(module_dim(simples, weights))
}

/// Distinct highest weights are non-isomorphic; equal-dimension pairs are
/// additionally confirmed by the commuting-map linear test.
fn check_modules_nonisomorphic(simples: &[SimpleKind], modules: &[Vec<u32>]) -> Result<()> {
    for (i, a) in modules.iter().enumerate() {
        for b in modules.iter().skip(i + 1) {
            if a == b {
                return Err(Error::InvalidSpec(
                    "BI modules must be pairwise non-isomorphic".into(),
                ));
            }
            if module_dim(simples, a) == module_dim(simples, b) {
                let ra = module_rep(simples, a)?;
                let rb = module_rep(simples, b)?;
                let space = intertwiner_space(&ra, &rb);
                assert!(
                    invertible_in_span(&space).is_none(),
                    "distinct highest weights produced isomorphic modules"
                );
            }
        }
    }
    Ok(())
}

/// Degree <= 2 is decided exactly (discriminant); higher degrees are
/// accepted with a warning.
fn check_irreducible(p: &Poly) -> Result<Vec<String>> {
    match p.degree() {
        None | Some(0) => Err(Error::InvalidSpec(format!("constant descriptor {p}"))),
        Some(1) => Ok(vec![]),
        Some(2) => {
            if p.irreducible_deg_le2()? {
                Ok(vec![])
            } else {
                Err(Error::InvalidSpec(format!(
                    "descriptor {p} is reducible (square discriminant)"
                )))
            }
        }
        Some(d) => Ok(vec![format!(
            "irreducibility of degree-{d} descriptor {p} is not verified; completeness claims exclude it"
        )]),
    }
}

/// Assembles `S (+) blocks (+ Fa)` from the semisimple algebra, per-block
/// S-representations and optional distinguished-element actions.
fn assemble_split(
    s_alg: &LieAlgebra,
    reps: &[Vec<Matrix>],
    a_actions: &[Option<Matrix>],
    with_a: bool,
) -> Result<LieAlgebra> {
    let sd = s_alg.dim();
    let block_dims: Vec<usize> = reps
        .iter()
        .zip(a_actions)
        .map(|(rep, act)| {
            rep.first().map_or_else(|| act.as_ref().map_or(0, Matrix::rows), Matrix::rows)
        })
        .collect();
    let n = sd + block_dims.iter().sum::<usize>() + usize::from(with_a);
    let a_idx = n - 1;
    let mut c = empty_constants(n);
    for i in 0..sd {
        for j in i + 1..sd {
            let mut coeffs = vec![Rat::zero(); n];
            for (k, co) in s_alg.bracket_basis(i, j) {
                coeffs[*k] = co.clone();
            }
            set_bracket(&mut c, i, j, &coeffs);
        }
    }
    let mut names: Vec<String> = s_alg.basis_names().to_vec();
    let mut offset = sd;
    for (bi, (rep, act)) in reps.iter().zip(a_actions).enumerate() {
        let d = block_dims[bi];
        for r in 0..d {
            names.push(format!("v{bi}_{r}"));
        }
        for (s_idx, mat) in rep.iter().enumerate() {
            for r in 0..d {
                let mut coeffs = vec![Rat::zero(); n];
                let mut nonzero = false;
                for row in 0..d {
                    if !mat[(row, r)].is_zero() {
                        coeffs[offset + row] = mat[(row, r)].clone();
                        nonzero = true;
                    }
                }
                if nonzero {
                    set_bracket(&mut c, s_idx, offset + r, &coeffs);
                }
            }
        }
        if with_a {
            if let Some(mat) = act {
                for r in 0..d {
                    let mut coeffs = vec![Rat::zero(); n];
                    let mut nonzero = false;
                    for row in 0..d {
                        if !mat[(row, r)].is_zero() {
                            coeffs[offset + row] = mat[(row, r)].clone();
                            nonzero = true;
                        }
                    }
                    if nonzero {
                        set_bracket(&mut c, a_idx, offset + r, &coeffs);
                    }
                }
            }
        }
        offset += d;
    }
    if with_a {
        names.push("a".into());
    }
    LieAlgebra::new(names, c)
}

fn subsets(n: usize) -> Vec<BTreeSet<usize>> {
    (0..(1u32 << n))
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
        .collect()
}

/// A symbolic ideal: which simple factors, which abelian blocks, and whether
/// the distinguished line is included.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
struct Sym {
    s: BTreeSet<usize>,
    b: BTreeSet<usize>,
    x: bool,
}

impl Sym {
    fn leq(&self, other: &Sym) -> bool {
        self.s.is_subset(&other.s) && self.b.is_subset(&other.b) && (!self.x || other.x)
    }

    fn to_subspace(&self, layout: &Layout) -> Subspace {
        let mut coords: Vec<usize> = Vec::new();
        for &i in &self.s {
            coords.extend(layout.simple_ranges[i].clone());
        }
        for &j in &self.b {
            coords.extend(layout.block_ranges[j].clone());
        }
        if self.x {
            coords.push(layout.extra.expect("x flag implies a distinguished line"));
        }
        coords.sort_unstable();
        Subspace::span(
            layout.dim,
            coords.into_iter().map(|i| {
                let mut v = vec![Rat::zero(); layout.dim];
                v[i] = Rat::one();
                v
            }),
        )
    }
}

/// One entry of the classified catalog of algebras with at most 10 ideals.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub tag: &'static str,
    pub expected_nodes: usize,
    pub spec: FamilySpec,
}

/// The full catalog with at most 10 ideals, one concrete spec per entry.
/// `sl2` (and `sl3` where a second simple factor appears as an ideal)
/// stand in for the abstract simple algebras; node counts follow the
/// diagram tags (`hN.k` has N nodes) and the count formulas.
pub fn catalog_upto_10() -> Vec<CatalogEntry> {
    use SimpleKind::Sl;
    let t1 = || Poly::from_i64(&[-1, 1]); // t - 1
    let t2 = || Poly::from_i64(&[-2, 1]); // t - 2
    let ti = || Poly::from_i64(&[1, 0, 1]); // t^2 + 1
    let ts = || Poly::from_i64(&[-2, 0, 1]); // t^2 - 2
    let tt = || Poly::t();
    let entry = |id, tag, expected_nodes, spec| CatalogEntry { id, tag, expected_nodes, spec };
    vec![
        entry("1.1a", "h1.1", 1, FamilySpec::A { center: false }),
        entry("1.1b", "h2.1", 2, FamilySpec::A { center: true }),
        entry("1.2.1", "h2.1", 2, FamilySpec::Simple { kind: Sl(2) }),
        entry("1.2.2a", "h4.2", 4, FamilySpec::semisimple(vec![Sl(2), Sl(3)])),
        entry("1.2.2b", "h4.2", 4, FamilySpec::d(vec![Sl(2)], FamilySpec::A { center: true })),
        entry("1.2.3a", "h8.15", 8, FamilySpec::semisimple(vec![Sl(2), Sl(2), Sl(2)])),
        entry(
            "1.2.3b",
            "h8.15",
            8,
            FamilySpec::d(vec![Sl(2), Sl(3)], FamilySpec::A { center: true }),
        ),
        entry("2.1.1a", "h3.1", 3, FamilySpec::bi(vec![Sl(2)], vec![vec![2]])),
        entry("2.1.1b", "h5.3", 5, FamilySpec::bi(vec![Sl(2)], vec![vec![2], vec![4]])),
        entry(
            "2.1.1c",
            "fig5.b",
            9,
            FamilySpec::bi(vec![Sl(2)], vec![vec![2], vec![4], vec![6]]),
        ),
        entry("2.1.2a", "h5.2", 5, FamilySpec::bi(vec![Sl(2), Sl(2)], vec![vec![2, 2]])),
        entry(
            "2.1.2b",
            "h7.8",
            7,
            FamilySpec::bi(vec![Sl(2), Sl(2)], vec![vec![4, 2], vec![2, 2]]),
        ),
        entry(
            "2.1.3a",
            "h8.13",
            8,
            FamilySpec::bi(vec![Sl(2), Sl(2)], vec![vec![2, 0], vec![4, 2]]),
        ),
        entry(
            "2.1.3b",
            "fig5.c",
            9,
            FamilySpec::bi(vec![Sl(2), Sl(2)], vec![vec![2, 0], vec![0, 2]]),
        ),
        entry(
            "2.1.4",
            "fig5.a",
            9,
            FamilySpec::bi(vec![Sl(2), Sl(2), Sl(2)], vec![vec![2, 2, 2]]),
        ),
        entry("2.2a", "h6.5", 6, FamilySpec::d(vec![Sl(2)], FamilySpec::bi(vec![Sl(2)], vec![vec![2]]))),
        entry(
            "2.2b",
            "fig5.e",
            10,
            FamilySpec::d(vec![Sl(2)], FamilySpec::bi(vec![Sl(2)], vec![vec![2], vec![4]])),
        ),
        entry(
            "2.2c",
            "fig5.d",
            10,
            FamilySpec::d(vec![Sl(2)], FamilySpec::bi(vec![Sl(2), Sl(2)], vec![vec![2, 2]])),
        ),
        entry("3.1a", "h6.5", 6, FamilySpec::bii(FamilySpec::bi(vec![Sl(2)], vec![vec![2]]))),
        entry(
            "3.1b",
            "fig5.e",
            10,
            FamilySpec::bii(FamilySpec::bi(vec![Sl(2)], vec![vec![2], vec![4]])),
        ),
        entry(
            "3.1c",
            "fig5.d",
            10,
            FamilySpec::bii(FamilySpec::bi(vec![Sl(2), Sl(2)], vec![vec![2, 2]])),
        ),
        entry(
            "4.1.1",
            "fig5.a",
            9,
            FamilySpec::biii(vec![Sl(2), Sl(2)], vec![], vec![(vec![2, 2], t1())]),
        ),
        entry("4.1.2a", "h5.2", 5, FamilySpec::biii(vec![Sl(2)], vec![], vec![(vec![2], t1())])),
        entry(
            "4.1.2b",
            "h7.8",
            7,
            FamilySpec::biii(vec![Sl(2)], vec![], vec![(vec![2], t1()), (vec![4], t1())]),
        ),
        entry(
            "4.1.3",
            "h7.8",
            7,
            FamilySpec::biii(vec![Sl(2)], vec![], vec![(vec![2], t1()), (vec![2], ti())]),
        ),
        entry(
            "4.1.4",
            "h8.13",
            8,
            FamilySpec::biii(vec![Sl(2)], vec![], vec![(vec![2], tt()), (vec![4], t1())]),
        ),
        entry(
            "4.1.5",
            "h8.13",
            8,
            FamilySpec::biii(vec![Sl(2)], vec![t1()], vec![(vec![2], t2())]),
        ),
        entry(
            "4.1.6",
            "fig5.c",
            9,
            FamilySpec::biii(vec![Sl(2)], vec![t1()], vec![(vec![2], tt())]),
        ),
        entry(
            "4.2",
            "fig5.d",
            10,
            FamilySpec::d(
                vec![Sl(2)],
                FamilySpec::biii(vec![Sl(2)], vec![], vec![(vec![2], t1())]),
            ),
        ),
        entry("5.1a", "h3.1", 3, FamilySpec::c(vec![ti()])),
        entry("5.1b", "h5.3", 5, FamilySpec::c(vec![ti(), t1()])),
        entry("5.1c", "fig5.b", 9, FamilySpec::c(vec![ti(), t1(), ts()])),
        entry("5.2a", "h6.5", 6, FamilySpec::d(vec![Sl(2)], FamilySpec::c(vec![ti()]))),
        entry("5.2b", "fig5.e", 10, FamilySpec::d(vec![Sl(2)], FamilySpec::c(vec![ti(), t1()]))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl_builds_semisimple() {
        let l2 = sl(2);
        assert_eq!(l2.dim(), 3);
        assert!(l2.is_semisimple());
        let l3 = sl(3);
        assert_eq!(l3.dim(), 8);
        assert!(l3.is_semisimple());
    }

    #[test]
    fn build_examples() {
        assert_eq!(FamilySpec::A { center: true }.build().unwrap().dim(), 1);
        assert_eq!(FamilySpec::A { center: false }.build().unwrap().dim(), 0);

        let bi = FamilySpec::bi(vec![SimpleKind::Sl(2)], vec![vec![2]]).build().unwrap();
        assert_eq!(bi.dim(), 6);
        assert!(!bi.is_semisimple());
        assert_eq!(bi.solvable_radical().dim(), 3);

        // [a, x] = y, [a, y] = -x from the companion of t^2 + 1
        let c = FamilySpec::c(vec![Poly::from_i64(&[1, 0, 1])]).build().unwrap();
        assert_eq!(c.dim(), 3);
        assert!(c.is_solvable());
        let names = c.basis_names();
        assert_eq!(names.last().unwrap(), "a");
    }

    #[test]
    fn predict_counts() {
        let c2 = FamilySpec::c(vec![Poly::from_i64(&[-1, 1]), Poly::from_i64(&[-2, 1])]);
        assert_eq!(c2.predict().unwrap().ideal_count, 5);

        let bi = FamilySpec::bi(vec![SimpleKind::Sl(2)], vec![vec![2]]);
        let p = bi.predict().unwrap();
        assert_eq!(p.bounds, Some((3, 3)));
        assert_eq!(p.ideal_count, 3);

        let d = FamilySpec::d(vec![SimpleKind::Sl(2)], bi);
        assert_eq!(d.predict().unwrap().formula_count, Some(6));
    }

    #[test]
    fn predict_lattices() {
        let bi = FamilySpec::bi(vec![SimpleKind::Sl(2)], vec![vec![2]]);
        let p = bi.predict().unwrap();
        assert!(p.lattice.is_isomorphic(&FiniteLattice::chain(3).unwrap()));

        let bii = FamilySpec::bii(bi);
        let p = bii.predict().unwrap();
        let expected = FiniteLattice::chain(3).unwrap().product(&FiniteLattice::chain(2).unwrap());
        assert!(p.lattice.is_isomorphic(&expected));
        assert_eq!(p.ideal_count, 6);

        // C with two linear blocks: bottom, two atom lines, A, L
        let c = FamilySpec::c(vec![Poly::from_i64(&[-1, 1]), Poly::from_i64(&[-2, 1])]);
        let p = c.predict().unwrap();
        assert_eq!(p.lattice.atoms().len(), 2);
        assert_eq!(p.lattice.length(), 3);
    }

    #[test]
    fn invalid_specs_rejected() {
        // isomorphic modules
        assert!(FamilySpec::bi(vec![SimpleKind::Sl(2)], vec![vec![2], vec![2]])
            .validate()
            .is_err());
        // trivial module
        assert!(FamilySpec::bi(vec![SimpleKind::Sl(2)], vec![vec![0]]).validate().is_err());
        // factor acting trivially everywhere
        assert!(FamilySpec::bi(vec![SimpleKind::Sl(2), SimpleKind::Sl(2)], vec![vec![2, 0]])
            .validate()
            .is_err());
        // reducible quadratic: t^2 - 4 has square discriminant
        assert!(FamilySpec::c(vec![Poly::from_i64(&[-4, 0, 1])]).validate().is_err());
        // pi = t in a C algebra
        assert!(FamilySpec::c(vec![Poly::t()]).validate().is_err());
        // duplicate primary components
        assert!(FamilySpec::c(vec![Poly::from_i64(&[-1, 1]), Poly::from_i64(&[-1, 1])])
            .validate()
            .is_err());
        // BIII with every block killed by a
        assert!(FamilySpec::biii(vec![SimpleKind::Sl(2)], vec![], vec![(vec![2], Poly::t())])
            .validate()
            .is_err());
        // degree-3 descriptor: accepted with a warning
        let w = FamilySpec::c(vec![Poly::from_i64(&[-2, 0, 0, 1])]).validate().unwrap();
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn catalog_is_valid_and_counts_match() {
        let catalog = catalog_upto_10();
        assert_eq!(catalog.len(), 34);
        for entry in catalog {
            let p = entry.spec.predict().unwrap();
            assert_eq!(
                p.ideal_count as usize, entry.expected_nodes,
                "catalog entry {} predicts a different node count",
                entry.id
            );
            assert!(entry.expected_nodes <= 10);
        }
    }

    /// For split builds with known semisimple part, the derived algebra is
    /// the direct sum of S and the Jacobson radical.
    #[test]
    fn derived_algebra_splits_as_s_plus_jacobson() {
        let specs = [
            FamilySpec::bi(vec![SimpleKind::Sl(2)], vec![vec![2], vec![4]]),
            FamilySpec::biii(vec![SimpleKind::Sl(2)], vec![Poly::from_i64(&[-1, 1])], vec![(
                vec![2],
                Poly::from_i64(&[-2, 1]),
            )]),
        ];
        for spec in specs {
            let alg = spec.build().unwrap();
            let layout = spec.layout();
            let s_span = Subspace::span(
                layout.dim,
                layout.simple_ranges.iter().flat_map(|r| r.clone()).map(|i| {
                    let mut v = vec![Rat::zero(); layout.dim];
                    v[i] = Rat::one();
                    v
                }),
            );
            let jac = alg.jacobson_radical();
            let l2 = alg.derived_subalgebra();
            assert_eq!(s_span.sum(&jac).unwrap(), l2);
            assert!(s_span.intersect(&jac).unwrap().is_zero());
        }
    }

    /// An algebra is solvable exactly when its derived algebra equals the
    /// Jacobson radical, and reductive exactly when the latter vanishes.
    #[test]
    fn solvability_trichotomy() {
        let algebras = [
            FamilySpec::c(vec![Poly::from_i64(&[1, 0, 1])]).build().unwrap(),
            FamilySpec::bi(vec![SimpleKind::Sl(2)], vec![vec![2]]).build().unwrap(),
            sl2(),
            LieAlgebra::abelian(2),
            LieAlgebra::solvable2(),
        ];
        for alg in algebras {
            let solvable = alg.is_solvable();
            let l2 = alg.derived_subalgebra();
            let jac = alg.jacobson_radical();
            assert_eq!(solvable, l2 == jac);
            if jac.is_zero() {
                // reductive: semisimple part plus centre spans everything
                let z = alg.center();
                let ssoc = alg.simple_socle();
                assert_eq!(ssoc.sum(&z).unwrap(), alg.full_space());
            }
        }
    }

    #[test]
    fn beyond_ten_ideals_note() {
        // the smallest BII (+) D combination already exceeds 10 ideals,
        // which is why the catalog stops at plain BII there
        let spec = FamilySpec::d(
            vec![SimpleKind::Sl(2)],
            FamilySpec::bii(FamilySpec::bi(vec![SimpleKind::Sl(2)], vec![vec![2]])),
        );
        assert!(spec.predict().unwrap().ideal_count > 10);
    }

    #[test]
    fn spec_serde_round_trip() {
        let spec = FamilySpec::biii(
            vec![SimpleKind::Sl(2)],
            vec![Poly::from_i64(&[-1, 1])],
            vec![(vec![2], Poly::from_i64(&[1, 0, 1]))],
        );
        let json = serde_json::to_string(&spec).unwrap();
        let back: FamilySpec = serde_json::from_str(&json).unwrap();
        assert_eq!(spec, back);
        // polynomials accept plain integers on input
        let textual = r#"{"variant":"C","polys":[[1,0,1]]}"#;
        let c: FamilySpec = serde_json::from_str(textual).unwrap();
        assert_eq!(c, FamilySpec::c(vec![Poly::from_i64(&[1, 0, 1])]));
    }
}
