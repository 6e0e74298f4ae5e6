//! JSON file formats and DOT emission.
//!
//! Three formats are exchanged between commands:
//!
//! * algebra files: dimension, basis names, and the brackets `[e_i, e_j]`
//!   for `i < j` only (antisymmetric completion implied);
//! * ideal-set files: the enumerated ideals as row-vector lists plus a
//!   status string and, for infinite lattices, the pencil witness;
//! * lattice files: size, labels and Hasse cover edges.
//!
//! Rationals are written as `"p/q"` strings (integers accepted on input).
//! Identical inputs serialize byte-identically.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{IdealSet, PencilWitness, Status};
use crate::lattice::FiniteLattice;
use crate::lie::{empty_constants, set_bracket, LieAlgebra};
use crate::matrix::Matrix;
use crate::rat::{PqRat, Rat};
use crate::subspace::Subspace;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: String,
    pub j: String,
    pub value: Vec<PqRat>,
}

pub fn algebra_to_file(l: &LieAlgebra) -> AlgebraFile {
    let n = l.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let entries = l.bracket_basis(i, j);
            if entries.is_empty() {
                continue;
            }
            let mut value = vec![Rat::from_integer(0.into()); n];
            for (k, co) in entries {
                value[*k] = co.clone();
            }
            brackets.push(BracketEntry {
                i: l.basis_names()[i].clone(),
                j: l.basis_names()[j].clone(),
                value: value.into_iter().map(PqRat).collect(),
            });
        }
    }
    AlgebraFile { dim: n, basis: l.basis_names().to_vec(), brackets }
}

pub fn algebra_from_file(f: &AlgebraFile) -> Result<LieAlgebra> {
    if f.basis.len() != f.dim {
        return Err(Error::Parse(format!(
            "dim is {} but {} basis names are given",
            f.dim,
            f.basis.len()
        )));
    }
    let index_of = |name: &str| -> Result<usize> {
        f.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| Error::Parse(format!("unknown basis name {name:?}")))
    };
    let mut c = empty_constants(f.dim);
    for entry in &f.brackets {
        let i = index_of(&entry.i)?;
        let j = index_of(&entry.j)?;
        if i >= j {
            return Err(Error::Parse(format!(
                "brackets must list i < j pairs only, got ({}, {})",
                entry.i, entry.j
            )));
        }
        if entry.value.len() != f.dim {
            return Err(Error::Parse(format!(
                "bracket ({}, {}) lists {} coefficients for dimension {}",
                entry.i,
                entry.j,
                entry.value.len(),
                f.dim
            )));
        }
        let coeffs: Vec<Rat> = entry.value.iter().map(|p| p.0.clone()).collect();
        set_bracket(&mut c, i, j, &coeffs);
    }
    LieAlgebra::new(f.basis.clone(), c)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealSetFile {
    pub dim: usize,
    pub status: String,
    pub ideals: Vec<Vec<Vec<PqRat>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessFile {
    pub modulus: Vec<Vec<PqRat>>,
    pub p: Vec<Vec<PqRat>>,
    pub q: Vec<Vec<PqRat>>,
    pub phi: Vec<Vec<PqRat>>,
}

fn rows_of(s: &Subspace) -> Vec<Vec<PqRat>> {
    s.basis_rows().map(|r| r.iter().cloned().map(PqRat).collect()).collect()
}

fn rows_of_matrix(m: &Matrix) -> Vec<Vec<PqRat>> {
    (0..m.rows()).map(|i| m.row(i).iter().cloned().map(PqRat).collect()).collect()
}

fn witness_file(w: &PencilWitness) -> WitnessFile {
    WitnessFile {
        modulus: rows_of(&w.modulus),
        p: rows_of(&w.p),
        q: rows_of(&w.q),
        phi: rows_of_matrix(&w.phi),
    }
}

pub fn idealset_to_file(ambient_dim: usize, ids: &IdealSet) -> IdealSetFile {
    let status = match &ids.status {
        Status::Complete => "complete",
        Status::InfiniteDetected(_) => "infinite",
        Status::BudgetExceeded => "budget-exceeded",
    };
    IdealSetFile {
        dim: ambient_dim,
        status: status.into(),
        ideals: ids.ideals.iter().map(rows_of).collect(),
        witness: ids.witness().map(witness_file),
    }
}

/// Reads back the ideal list; only `complete` files reconstruct a usable
/// `IdealSet` (the witness block is informational).
pub fn idealset_from_file(f: &IdealSetFile) -> Result<IdealSet> {
    if f.status != "complete" {
        return Err(Error::NotComplete(format!("ideal-set file has status {:?}", f.status)));
    }
    let mut ideals = std::collections::BTreeSet::new();
    for rows in &f.ideals {
        let vecs = rows.iter().map(|r| r.iter().map(|p| p.0.clone()).collect::<Vec<_>>());
        ideals.insert(Subspace::span(f.dim, vecs));
    }
    Ok(IdealSet { ideals, status: Status::Complete })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeFile {
    pub size: usize,
    pub labels: Vec<String>,
    pub covers: Vec<(usize, usize)>,
}

pub fn lattice_to_file(l: &FiniteLattice) -> LatticeFile {
    LatticeFile {
        size: l.size(),
        labels: l.labels().to_vec(),
        covers: l.hasse_edges().to_vec(),
    }
}

pub fn lattice_from_file(f: &LatticeFile) -> Result<FiniteLattice> {
    if f.labels.len() != f.size {
        return Err(Error::Parse(format!(
            "size is {} but {} labels are given",
            f.size,
            f.labels.len()
        )));
    }
    FiniteLattice::from_covers(f.labels.clone(), &f.covers)
}

/// Hasse diagram in DOT: one point node per element, one edge per cover,
/// elements of equal height on the same rank so the drawing reads bottom-up.
pub fn hasse_dot(l: &FiniteLattice, with_labels: bool) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir = BT;\n  edge [dir = none];\n");
    if with_labels {
        out.push_str("  node [shape = circle, fontsize = 10];\n");
    } else {
        out.push_str("  node [shape = point, width = 0.12];\n");
    }
    write_nodes_and_edges(&mut out, l, with_labels, "n", "  ");
    out.push_str("}\n");
    out
}

/// One DOT document holding several lattices as clusters.
pub fn hasse_dot_sheet(items: &[(String, &FiniteLattice)], with_labels: bool) -> String {
    let mut out = String::from("digraph sheet {\n  rankdir = BT;\n  edge [dir = none];\n");
    if with_labels {
        out.push_str("  node [shape = circle, fontsize = 10];\n");
    } else {
        out.push_str("  node [shape = point, width = 0.12];\n");
    }
    for (idx, (name, l)) in items.iter().enumerate() {
        out.push_str(&format!("  subgraph cluster_{idx} {{\n    label = \"{name}\";\n"));
        write_nodes_and_edges(&mut out, l, with_labels, &format!("g{idx}_n"), "    ");
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

fn write_nodes_and_edges(
    out: &mut String,
    l: &FiniteLattice,
    with_labels: bool,
    prefix: &str,
    indent: &str,
) {
    if with_labels {
        for (i, label) in l.labels().iter().enumerate() {
            out.push_str(&format!("{indent}{prefix}{i} [label = \"{label}\"];\n"));
        }
    }
    let max_h = *l.heights().iter().max().unwrap_or(&0);
    for h in 0..=max_h {
        let level: Vec<String> = (0..l.size())
            .filter(|&i| l.heights()[i] == h)
            .map(|i| format!("{prefix}{i};"))
            .collect();
        if !level.is_empty() {
            out.push_str(&format!("{indent}{{ rank = same; {} }}\n", level.join(" ")));
        }
    }
    for &(a, b) in l.hasse_edges() {
        out.push_str(&format!("{indent}{prefix}{a} -> {prefix}{b};\n"));
    }
}

/// Pretty JSON with a trailing newline; field order is fixed by the structs,
/// so equal values serialize byte-identically.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn from_json_str<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::enumerate_ideals;

    #[test]
    fn algebra_round_trip() {
        let l = crate::families::sl2().direct_sum(&LieAlgebra::heisenberg3());
        let f = algebra_to_file(&l);
        let back = algebra_from_file(&f).unwrap();
        assert_eq!(l, back);
        // byte determinism
        assert_eq!(to_json_string(&f), to_json_string(&algebra_to_file(&back)));
    }

    #[test]
    fn algebra_file_rejects_malformed() {
        let l = crate::families::sl2();
        let mut f = algebra_to_file(&l);
        f.brackets[0].j = "nope".into();
        assert!(algebra_from_file(&f).is_err());
        let mut f = algebra_to_file(&l);
        let entry = &mut f.brackets[0];
        std::mem::swap(&mut entry.i, &mut entry.j);
        assert!(algebra_from_file(&f).is_err()); // i < j required
        let mut f = algebra_to_file(&l);
        f.brackets[0].value.pop();
        assert!(algebra_from_file(&f).is_err());
    }

    #[test]
    fn idealset_round_trip() {
        let l = crate::families::sl2().direct_sum(&crate::families::sl2());
        let ids = enumerate_ideals(&l, 32).unwrap();
        let f = idealset_to_file(l.dim(), &ids);
        assert_eq!(f.status, "complete");
        let back = idealset_from_file(&f).unwrap();
        assert_eq!(back.ideals, ids.ideals);

        let ab = LieAlgebra::abelian(2);
        let ids = enumerate_ideals(&ab, 32).unwrap();
        let f = idealset_to_file(ab.dim(), &ids);
        assert_eq!(f.status, "infinite");
        assert!(f.witness.is_some());
        assert!(idealset_from_file(&f).is_err());
    }

    #[test]
    fn lattice_round_trip() {
        let l = FiniteLattice::m_lattice(4).unwrap();
        let f = lattice_to_file(&l);
        let back = lattice_from_file(&f).unwrap();
        assert!(back.is_isomorphic(&l));
        assert_eq!(back.hasse_edges(), l.hasse_edges());
    }

    #[test]
    fn dot_output_shape() {
        let l = FiniteLattice::cube(2).unwrap();
        let dot = hasse_dot(&l, false);
        assert_eq!(dot.matches(" -> ").count(), 4);
        assert!(dot.contains("shape = point"));
        let labeled = hasse_dot(&l, true);
        assert!(labeled.contains("label = "));
        // deterministic
        assert_eq!(dot, hasse_dot(&l, false));
    }
}
