//! Spherical representations `(m/i, n/j)` of the regular polyhedra, with their
//! densities and genera.
//!
//! A representation wraps a regular polyhedron with `E` edges around the
//! sphere `d = E * (i/m + j/n - 1/2)` times. The genus is that of the abstract
//! surface of the underlying polyhedron.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RiemannError {
    #[error("cannot parse fraction {0:?}")]
    Parse(String),
    #[error("density of ({cell}, {vertex_figure}) over {edges} edges is {value}, not a positive integer")]
    Density { cell: Fraction, vertex_figure: Fraction, edges: u64, value: String },
    #[error("Euler characteristic {0} is odd")]
    OddEuler(i64),
    #[error("no representation ({0}, {1}) in the table")]
    NotInTable(Fraction, Fraction),
    #[error("stored density {stored} differs from computed {computed} at ({cell}, {vertex_figure})")]
    Mismatch { cell: Fraction, vertex_figure: Fraction, stored: u64, computed: u64 },
}

pub type Result<T, E = RiemannError> = std::result::Result<T, E>;

/// A polygon `m/i`: `m` vertices, each joined to the `i`-th next. Kept
/// unreduced, so `5/7` is accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction {
    pub m: u64,
    pub i: u64,
}

impl Fraction {
    pub const fn new(m: u64, i: u64) -> Self {
        Fraction { m, i }
    }

    fn ratio(self) -> Ratio<i64> {
        Ratio::new(self.i as i64, self.m as i64)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.m, self.i)
    }
}

impl FromStr for Fraction {
    type Err = RiemannError;

    fn from_str(s: &str) -> Result<Self> {
        let err = || RiemannError::Parse(s.to_string());
        let (m, i) = s.trim().split_once('/').unwrap_or((s.trim(), "1"));
        let m: u64 = m.trim().parse().map_err(|_| err())?;
        let i: u64 = i.trim().parse().map_err(|_| err())?;
        if m < 2 || i == 0 {
            return Err(err());
        }
        Ok(Fraction { m, i })
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Vertex, edge and face counts of a base polyhedron.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub v: u64,
    pub e: u64,
    pub f: u64,
}

impl Counts {
    pub fn euler(self) -> i64 {
        self.v as i64 - self.e as i64 + self.f as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationEntry {
    pub cell: Fraction,
    pub vertex_figure: Fraction,
    pub base: String,
    pub counts: Counts,
    pub density: u64,
    pub genus: u64,
}

/// `edges * (i/m + j/n - 1/2)`, required to be a positive integer.
pub fn density(cell: Fraction, vertex_figure: Fraction, edges: u64) -> Result<u64> {
    let value = (cell.ratio() + vertex_figure.ratio() - Ratio::new(1, 2)) * edges as i64;
    if !value.is_integer() || value <= Ratio::from_integer(0) {
        return Err(RiemannError::Density { cell, vertex_figure, edges, value: value.to_string() });
    }
    Ok(value.to_integer() as u64)
}

pub fn genus(counts: Counts) -> Result<u64> {
    let chi = counts.euler();
    if chi % 2 != 0 {
        return Err(RiemannError::OddEuler(chi));
    }
    Ok(((2 - chi) / 2) as u64)
}

/// Base polyhedron of `(m/i, n/j)`: the regular polyhedron `{m, n}` whose
/// faces and vertex figures are star polygons exactly when `i`, `j` are
/// neither 1 nor `m - 1`; a doubled polygon when either side is a digon.
pub fn base_polyhedron(cell: Fraction, vertex_figure: Fraction) -> (String, Counts) {
    let star = |f: Fraction| f.i % f.m != 1 && f.i % f.m != f.m - 1;
    let c = |v, e, f| Counts { v, e, f };
    let (m, n) = (cell.m, vertex_figure.m);
    match (m, n, star(cell), star(vertex_figure)) {
        (2, 2, ..) => ("doubled 2-gon".into(), c(2, 2, 2)),
        (2, n, ..) => (format!("doubled {n}-gon"), c(n, n, 2)),
        (m, 2, ..) => (format!("doubled {m}-gon, dual"), c(2, m, m)),
        (3, 3, ..) => ("tetrahedron".into(), c(4, 6, 4)),
        (3, 4, ..) => ("octahedron".into(), c(6, 12, 8)),
        (4, 3, ..) => ("cube".into(), c(8, 12, 6)),
        (3, 5, false, false) => ("icosahedron".into(), c(12, 30, 20)),
        (3, 5, false, true) => ("great icosahedron".into(), c(12, 30, 20)),
        (5, 3, false, false) => ("dodecahedron".into(), c(20, 30, 12)),
        (5, 3, true, false) => ("great stellated dodecahedron".into(), c(20, 30, 12)),
        (5, 5, false, true) => ("great dodecahedron".into(), c(12, 30, 12)),
        (5, 5, true, false) => ("small stellated dodecahedron".into(), c(12, 30, 12)),
        _ => (format!("{{{cell}, {vertex_figure}}}"), c(0, 0, 0)),
    }
}

const fn fr(m: u64, i: u64) -> Fraction {
    Fraction::new(m, i)
}

/// Rows of the table with their columns and printed densities.
const TABLE2: &[(Fraction, &[(Fraction, u64)])] = &[
    (fr(3, 1), &[(fr(3, 1), 1), (fr(3, 2), 3), (fr(4, 1), 1), (fr(4, 3), 7), (fr(5, 1), 1), (fr(5, 4), 19), (fr(5, 2), 7), (fr(5, 3), 13)]),
    (fr(3, 2), &[(fr(3, 1), 3), (fr(3, 2), 5), (fr(4, 1), 5), (fr(4, 3), 11), (fr(5, 1), 11), (fr(5, 4), 29), (fr(5, 2), 17), (fr(5, 3), 23)]),
    (fr(4, 1), &[(fr(3, 1), 1), (fr(3, 2), 5)]),
    (fr(4, 3), &[(fr(3, 1), 7), (fr(3, 2), 11)]),
    (fr(5, 1), &[(fr(3, 1), 1), (fr(3, 2), 11), (fr(5, 2), 3), (fr(5, 3), 9)]),
    (fr(5, 4), &[(fr(3, 1), 19), (fr(3, 2), 29), (fr(5, 2), 21), (fr(5, 3), 27)]),
    (fr(5, 2), &[(fr(3, 1), 7), (fr(3, 2), 17), (fr(5, 1), 3), (fr(5, 4), 21)]),
    (fr(5, 3), &[(fr(3, 1), 13), (fr(3, 2), 23), (fr(5, 1), 9), (fr(5, 4), 27)]),
];

/// Columns of the table used by the digon family.
const COLUMNS: [Fraction; 8] = [fr(3, 1), fr(3, 2), fr(4, 1), fr(4, 3), fr(5, 1), fr(5, 4), fr(5, 2), fr(5, 3)];

pub fn representation(cell: Fraction, vertex_figure: Fraction) -> Result<RepresentationEntry> {
    let (base, counts) = base_polyhedron(cell, vertex_figure);
    let density = density(cell, vertex_figure, counts.e)?;
    let genus = genus(counts)?;
    Ok(RepresentationEntry { cell, vertex_figure, base, counts, density, genus })
}

fn checked(cell: Fraction, vertex_figure: Fraction, stored: u64) -> Result<RepresentationEntry> {
    let entry = representation(cell, vertex_figure)?;
    if entry.density != stored {
        return Err(RiemannError::Mismatch { cell, vertex_figure, stored, computed: entry.density });
    }
    Ok(entry)
}

/// The 36 representations of the nine regular polyhedra, each checked
/// against its printed density.
pub fn enumerate_table2() -> Result<Vec<RepresentationEntry>> {
    let mut out = Vec::new();
    for &(cell, row) in TABLE2 {
        for &(vf, stored) in row {
            out.push(checked(cell, vf, stored)?);
        }
    }
    Ok(out)
}

/// Representations on doubled polygons: `(2/1, m/i)` for every column, its
/// dual `(m/i, 2/1)`, and `(2/1, 2/1)`; each has density `i`.
pub fn digon_family() -> Result<Vec<RepresentationEntry>> {
    let two = fr(2, 1);
    let mut out = vec![checked(two, two, 1)?];
    for &c in &COLUMNS {
        out.push(checked(two, c, c.i)?);
    }
    for &c in &COLUMNS {
        out.push(checked(c, two, c.i)?);
    }
    Ok(out)
}

/// Looks up a representation in the table or the digon family.
pub fn lookup(cell: Fraction, vertex_figure: Fraction) -> Result<RepresentationEntry> {
    enumerate_table2()?
        .into_iter()
        .chain(digon_family()?)
        .find(|e| e.cell == cell && e.vertex_figure == vertex_figure)
        .ok_or(RiemannError::NotInTable(cell, vertex_figure))
}

/// The table laid out as printed: one line per row fraction, blanks for
/// missing cells.
pub fn format_table(entries: &[RepresentationEntry]) -> String {
    let mut out = format!("{:>5} |", "");
    for c in &COLUMNS {
        out.push_str(&format!("{:>5}", c.to_string()));
    }
    out.push('\n');
    out.push_str(&"-".repeat(7 + 5 * COLUMNS.len()));
    out.push('\n');
    let mut rows: Vec<Fraction> = Vec::new();
    for e in entries {
        if !rows.contains(&e.cell) {
            rows.push(e.cell);
        }
    }
    for r in rows {
        out.push_str(&format!("{:>5} |", r.to_string()));
        for c in &COLUMNS {
            match entries.iter().find(|e| e.cell == r && e.vertex_figure == *c) {
                Some(e) => out.push_str(&format!("{:>5}", e.density)),
                None => out.push_str(&format!("{:>5}", "")),
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_examples() {
        assert_eq!(density(fr(3, 1), fr(5, 1), 30), Ok(1));
        assert_eq!(density(fr(5, 2), fr(3, 1), 30), Ok(7));
        assert_eq!(density(fr(2, 1), fr(5, 3), 5), Ok(3));
        assert!(matches!(density(fr(3, 1), fr(3, 1), 7), Err(RiemannError::Density { .. })));
        assert!(matches!(density(fr(6, 1), fr(3, 1), 12), Err(RiemannError::Density { .. })));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(representation(fr(5, 1), fr(5, 2)).unwrap().genus, 4);
        assert_eq!(representation(fr(3, 2), fr(3, 2)).unwrap().genus, 0);
        assert_eq!(representation(fr(4, 3), fr(3, 1)).unwrap().genus, 0);
        assert_eq!(genus(Counts { v: 1, e: 2, f: 2 }), Err(RiemannError::OddEuler(1)));
    }

    #[test]
    fn table_shape() {
        let t = enumerate_table2().unwrap();
        assert_eq!(t.len(), 36);
        assert_eq!(t.iter().filter(|e| e.genus == 4).count(), 8);
        assert_eq!(t.iter().filter(|e| e.genus == 0).count(), 28);
        assert!(t.iter().filter(|e| e.genus == 4).all(|e| e.cell.m == 5 && e.vertex_figure.m == 5));
        assert_eq!(lookup(fr(3, 2), fr(3, 2)).unwrap().density, 5);
        assert_eq!(lookup(fr(5, 4), fr(5, 2)).unwrap().density, 21);
    }

    #[test]
    fn digons_have_density_i() {
        for e in digon_family().unwrap() {
            let other = if e.cell.m == 2 { e.vertex_figure } else { e.cell };
            assert_eq!(e.density, other.i);
        }
        for m in 2..40 {
            for i in 1..m {
                assert_eq!(density(fr(2, 1), fr(m, i), m), Ok(i));
            }
        }
    }

    #[test]
    fn wrapped_fractions_extend_the_formula() {
        // 5/7 winds one extra time around the pentagon.
        let d = density(fr(5, 7), fr(3, 1), 30).unwrap();
        assert_eq!(d, density(fr(5, 2), fr(3, 1), 30).unwrap() + 30);
    }

    #[test]
    fn parse_and_layout() {
        assert_eq!("5/2".parse::<Fraction>().unwrap(), fr(5, 2));
        assert_eq!("4".parse::<Fraction>().unwrap(), fr(4, 1));
        assert!("x/2".parse::<Fraction>().is_err());
        let text = format_table(&enumerate_table2().unwrap());
        assert_eq!(text.lines().count(), 10);
        assert!(text.lines().nth(3).unwrap().contains("29"));
    }
}
