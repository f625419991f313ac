//! Affine type classification and static diagram data.
//!
//! An affine type `X_N~r` is a family letter, a subscript N, and a twist
//! order r.  Supported types:
//!
//! untwisted (r = 1): A_n (n>=1), B_n (n>=3), C_n (n>=2), D_n (n>=4),
//! E_6, E_7, E_8, F_4, G_2;
//! twisted: A_{2n}~2 (n>=2), A_{2n-1}~2 (n>=3), D_{n+1}~2 (n>=3),
//! E_6~2, D_4~3.
//!
//! For each type the tables below record the marks a_i and comarks av_i of
//! the affine Dynkin diagram (node 0 is the affine node), the underlying
//! finite type, and the adjacent type used by the S-matrix pairing.  The
//! dual Coxeter number is the comark sum.
//!
//! Finite node numbering (pinned by the Cartan-matrix tests in this file
//! and in `root_system`):
//! - A_n, B_n, C_n, D_n: chain 1..n; in B_n node n is short, in C_n node n
//!   is long; in D_n nodes n-1 and n are the fork.
//! - E_6: chain 1-2-3-4-5 with node 6 attached to node 3.
//! - E_7: chain 1-2-3-4-5-6 with node 7 attached to node 3.
//! - E_8: chain 1-2-3-4-5-6-7 with node 8 attached to node 5.
//! - F_4: chain 1-2-3-4 with the double edge between 2 and 3.  For F_4~1
//!   nodes 1,2 are long; for E_6~2 (same shape) nodes 3,4 are long.
//! - G_2: edge 1-2.  For G_2~1 node 1 is long; for D_4~3 node 2 is long.
//!
//! Whether a node is long or short is not stored separately: squared root
//! lengths are 2*av_i/a_i, so the marks and comarks determine the whole
//! normalized bilinear form.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// Finite simple type, e.g. the C_2 underlying A_4~2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Affine Kac-Moody type X_N^(r), written canonically as `XN~r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineType {
    pub family: Family,
    /// The subscript N in X_N^(r).
    pub subscript: u32,
    /// The twist order r (1, 2 or 3).
    pub twist: u32,
}

/// Broad behavioural class of an affine type.  The lattice M, the coroot
/// theta-check and the torus-point recipe differ per class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeClass {
    /// r = 1.
    Untwisted,
    /// A_{2n}~2: the only class with a_0 = 2 and M = half the long-root lattice.
    TwistedA2n,
    /// Remaining twisted types: A_{2n-1}~2, D_{n+1}~2, E_6~2, D_4~3.
    TwistedDual,
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}~{}", self.family, self.subscript, self.twist)
    }
}

impl AffineType {
    pub fn new(family: Family, subscript: u32, twist: u32) -> Result<Self> {
        let t = AffineType { family, subscript, twist };
        t.validate()?;
        Ok(t)
    }

    /// Parse `A4~2`, `A_4^(2)`, `C2~1` and similar spellings.
    pub fn parse(text: &str) -> Result<Self> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace() && *c != '_').collect();
        // normalize  ^(r)  and  ^r  to  ~r
        let cleaned = cleaned.replace("^(", "~").replace(')', "").replace('^', "~");
        let mut chars = cleaned.chars();
        let fam = match chars.next() {
            Some('A') | Some('a') => Family::A,
            Some('B') | Some('b') => Family::B,
            Some('C') | Some('c') => Family::C,
            Some('D') | Some('d') => Family::D,
            Some('E') | Some('e') => Family::E,
            Some('F') | Some('f') => Family::F,
            Some('G') | Some('g') => Family::G,
            _ => return Err(Error::ParseType(text.to_string())),
        };
        let rest: String = chars.collect();
        let (num_part, twist_part) = match rest.split_once('~') {
            Some((a, b)) => (a, b),
            None => return Err(Error::ParseType(text.to_string())),
        };
        let subscript: u32 = num_part.parse().map_err(|_| Error::ParseType(text.to_string()))?;
        let twist: u32 = twist_part.parse().map_err(|_| Error::ParseType(text.to_string()))?;
        AffineType::new(fam, subscript, twist)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::UnsupportedType(self.to_string(), msg.to_string()));
        let n = self.subscript;
        match (self.family, self.twist) {
            (Family::A, 1) if n >= 1 => Ok(()),
            (Family::B, 1) if n >= 3 => Ok(()),
            (Family::C, 1) if n >= 2 => Ok(()),
            (Family::D, 1) if n >= 4 => Ok(()),
            (Family::E, 1) if (6..=8).contains(&n) => Ok(()),
            (Family::F, 1) if n == 4 => Ok(()),
            (Family::G, 1) if n == 2 => Ok(()),
            (Family::A, 2) if n % 2 == 0 && n >= 4 => Ok(()),
            (Family::A, 2) if n % 2 == 1 && n >= 5 => Ok(()),
            (Family::A, 2) => bad("A_N~2 requires N = 2n with n >= 2 or N = 2n-1 with n >= 3"),
            (Family::D, 2) if n >= 4 => Ok(()),
            (Family::D, 2) => bad("D_N~2 requires N >= 4"),
            (Family::E, 2) if n == 6 => Ok(()),
            (Family::D, 3) if n == 4 => Ok(()),
            (_, 1) => bad("rank outside the allowed range for this family"),
            _ => bad("no affine diagram with this twist"),
        }
    }

    /// Rank n of the underlying finite algebra.
    pub fn rank(&self) -> usize {
        match (self.family, self.twist) {
            (_, 1) => self.subscript as usize,
            (Family::A, 2) => {
                if self.subscript % 2 == 0 {
                    (self.subscript / 2) as usize // A_{2n}~2
                } else {
                    ((self.subscript + 1) / 2) as usize // A_{2n-1}~2
                }
            }
            (Family::D, 2) => (self.subscript - 1) as usize, // D_{n+1}~2
            (Family::E, 2) => 4,
            (Family::D, 3) => 2,
            _ => unreachable!("validated at construction"),
        }
    }

    pub fn class(&self) -> TypeClass {
        match (self.family, self.twist) {
            (_, 1) => TypeClass::Untwisted,
            (Family::A, 2) if self.subscript % 2 == 0 => TypeClass::TwistedA2n,
            _ => TypeClass::TwistedDual,
        }
    }
}

/// Static diagram data for one affine type.
#[derive(Debug, Clone)]
pub struct AffineData {
    pub affine_type: AffineType,
    /// Rank of the underlying finite algebra.
    pub rank: usize,
    /// Marks a_0..a_n of the affine diagram.
    pub marks: Vec<i64>,
    /// Comarks av_0..av_n; their sum is the dual Coxeter number.
    pub comarks: Vec<i64>,
    /// Dual Coxeter number.
    pub dual_coxeter: i64,
    /// Underlying finite type.
    pub finite_type: FiniteType,
    /// Simply-laced source type of the orbit construction (equals the
    /// finite type for untwisted algebras).
    pub orbit_source_type: FiniteType,
    /// Adjacent type paired by the S-matrix; self for r = 1 and A_{2n}~2.
    pub adjacent_type: AffineType,
}

/// Build the table entry for a validated affine type.
pub fn affine_data(t: AffineType) -> AffineData {
    let n = t.rank();
    let fam = t.family;
    let sub = t.subscript as usize;
    let fin = |family, rank| FiniteType { family, rank };
    // marks and comarks listed with node 0 first
    let (marks, comarks, finite, orbit, adjacent): (Vec<i64>, Vec<i64>, FiniteType, FiniteType, AffineType) =
        match (fam, t.twist) {
            (Family::A, 1) => (
                vec![1; n + 1],
                vec![1; n + 1],
                fin(Family::A, n),
                fin(Family::A, n),
                t,
            ),
            (Family::B, 1) => {
                let mut a = vec![2; n + 1];
                a[0] = 1;
                a[1] = 1;
                let mut av = a.clone();
                av[n] = 1;
                (a, av, fin(Family::B, n), fin(Family::B, n), t)
            }
            (Family::C, 1) => {
                let mut a = vec![2; n + 1];
                a[0] = 1;
                a[n] = 1;
                (a, vec![1; n + 1], fin(Family::C, n), fin(Family::C, n), t)
            }
            (Family::D, 1) => {
                let mut a = vec![2; n + 1];
                a[0] = 1;
                a[1] = 1;
                a[n - 1] = 1;
                a[n] = 1;
                (a.clone(), a, fin(Family::D, n), fin(Family::D, n), t)
            }
            (Family::E, 1) => {
                let a: Vec<i64> = match sub {
                    6 => vec![1, 1, 2, 3, 2, 1, 2],
                    7 => vec![1, 2, 3, 4, 3, 2, 1, 2],
                    8 => vec![1, 2, 3, 4, 5, 6, 4, 2, 3],
                    _ => unreachable!(),
                };
                (a.clone(), a, fin(Family::E, n), fin(Family::E, n), t)
            }
            (Family::F, 1) => (
                vec![1, 2, 3, 4, 2],
                vec![1, 2, 3, 2, 1],
                fin(Family::F, 4),
                fin(Family::F, 4),
                t,
            ),
            (Family::G, 1) => (
                vec![1, 2, 3],
                vec![1, 2, 1],
                fin(Family::G, 2),
                fin(Family::G, 2),
                t,
            ),
            (Family::A, 2) if sub % 2 == 0 => {
                // A_{2n}~2
                let mut a = vec![2; n + 1];
                a[n] = 1;
                let mut av = vec![2; n + 1];
                av[0] = 1;
                (a, av, fin(Family::C, n), fin(Family::A, 2 * n), t)
            }
            (Family::A, 2) => {
                // A_{2n-1}~2
                let mut a = vec![2; n + 1];
                a[0] = 1;
                a[1] = 1;
                a[n] = 1;
                let mut av = vec![2; n + 1];
                av[0] = 1;
                av[1] = 1;
                (
                    a,
                    av,
                    fin(Family::C, n),
                    fin(Family::D, n + 1),
                    AffineType { family: Family::D, subscript: (n + 1) as u32, twist: 2 },
                )
            }
            (Family::D, 2) => {
                // D_{n+1}~2
                let mut av = vec![2; n + 1];
                av[0] = 1;
                av[n] = 1;
                (
                    vec![1; n + 1],
                    av,
                    fin(Family::B, n),
                    fin(Family::A, 2 * n - 1),
                    AffineType { family: Family::A, subscript: (2 * n - 1) as u32, twist: 2 },
                )
            }
            (Family::E, 2) => (
                vec![1, 2, 3, 2, 1],
                vec![1, 2, 3, 4, 2],
                fin(Family::F, 4),
                fin(Family::E, 6),
                t,
            ),
            (Family::D, 3) => (
                vec![1, 2, 1],
                vec![1, 2, 3],
                fin(Family::G, 2),
                fin(Family::D, 4),
                t,
            ),
            _ => unreachable!("validated at construction"),
        };
    let h_check: i64 = comarks.iter().sum();
    AffineData {
        affine_type: t,
        rank: n,
        marks,
        comarks,
        dual_coxeter: h_check,
        finite_type: finite,
        orbit_source_type: orbit,
        adjacent_type: adjacent,
    }
}

/// Edge list of the finite Dynkin diagram (0-based node indices).
pub fn finite_edges(ft: FiniteType) -> Vec<(usize, usize)> {
    let n = ft.rank;
    let chain = |m: usize| (0..m.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match ft.family {
        Family::A | Family::B | Family::C => chain(n),
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            e
        }
        Family::E => match n {
            6 => {
                let mut e = chain(5);
                e.push((2, 5));
                e
            }
            7 => {
                let mut e = chain(6);
                e.push((2, 6));
                e
            }
            8 => {
                let mut e = chain(7);
                e.push((4, 7));
                e
            }
            _ => unreachable!(),
        },
        Family::F => chain(4),
        Family::G => vec![(0, 1)],
    }
}

/// Order of the finite Weyl group, from the classical product formulas.
pub fn weyl_order(ft: FiniteType) -> u64 {
    let n = ft.rank as u64;
    let fact = |m: u64| (1..=m).product::<u64>();
    match ft.family {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u64 << n) * fact(n),
        Family::D => (1u64 << (n - 1)) * fact(n),
        Family::G => 12,
        Family::F => 1152,
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            8 => 696_729_600,
            _ => unreachable!(),
        },
    }
}

/// Number of positive roots of the finite system.
pub fn positive_root_count(ft: FiniteType) -> usize {
    let n = ft.rank;
    match ft.family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::G => 6,
        Family::F => 24,
        Family::E => match n {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => unreachable!(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> AffineType {
        AffineType::parse(s).unwrap()
    }

    #[test]
    fn parse_accepts_standard_spellings() {
        assert_eq!(t("A4~2"), t("A_4^(2)"));
        assert_eq!(t("A4~2"), t("a4^2"));
        assert_eq!(t("C2~1").to_string(), "C2~1");
        assert_eq!(t("A4~2").to_string(), "A4~2");
        assert_eq!(t("D4~3").rank(), 2);
    }

    #[test]
    fn parse_rejects_out_of_range_types() {
        for bad in ["B2~1", "C1~1", "D3~1", "A2~2", "A3~2", "D3~2", "E6~3", "F4~2", "G2~2", "E9~1", "X1~1", "A4", "A~1"] {
            assert!(AffineType::parse(bad).is_err(), "{bad} should be rejected");
        }
    }

    #[test]
    fn ranks_and_classes() {
        assert_eq!(t("A4~2").rank(), 2);
        assert_eq!(t("A6~2").rank(), 3);
        assert_eq!(t("A5~2").rank(), 3);
        assert_eq!(t("D4~2").rank(), 3);
        assert_eq!(t("D5~2").rank(), 4);
        assert_eq!(t("E6~2").rank(), 4);
        assert_eq!(t("B3~1").rank(), 3);
        assert_eq!(t("A4~2").class(), TypeClass::TwistedA2n);
        assert_eq!(t("A5~2").class(), TypeClass::TwistedDual);
        assert_eq!(t("G2~1").class(), TypeClass::Untwisted);
    }

    #[test]
    fn dual_coxeter_numbers_match_the_classification_tables() {
        let expect = [
            ("A1~1", 2),
            ("A4~1", 5),
            ("B3~1", 5),
            ("B4~1", 7),
            ("C2~1", 3),
            ("C3~1", 4),
            ("D4~1", 6),
            ("D5~1", 8),
            ("E6~1", 12),
            ("E7~1", 18),
            ("E8~1", 30),
            ("F4~1", 9),
            ("G2~1", 4),
            ("A4~2", 5),
            ("A6~2", 7),
            ("A5~2", 6),
            ("A7~2", 8),
            ("D4~2", 6),
            ("D5~2", 8),
            ("E6~2", 12),
            ("D4~3", 6),
        ];
        for (name, h) in expect {
            let d = affine_data(t(name));
            assert_eq!(d.dual_coxeter, h, "dual Coxeter of {name}");
            assert_eq!(d.comarks.iter().sum::<i64>(), h, "comark sum of {name}");
        }
    }

    #[test]
    fn underlying_finite_and_orbit_types() {
        let cases = [
            ("A4~2", "C2", "A4"),
            ("A6~2", "C3", "A6"),
            ("A5~2", "C3", "D4"),
            ("D4~2", "B3", "A5"),
            ("D5~2", "B4", "A7"),
            ("E6~2", "F4", "E6"),
            ("D4~3", "G2", "D4"),
            ("B3~1", "B3", "B3"),
        ];
        for (name, fin, orbit) in cases {
            let d = affine_data(t(name));
            assert_eq!(d.finite_type.to_string(), fin);
            assert_eq!(d.orbit_source_type.to_string(), orbit);
        }
    }

    #[test]
    fn adjacency_is_an_involution_and_pairs_the_dual_families() {
        assert_eq!(affine_data(t("A5~2")).adjacent_type, t("D4~2"));
        assert_eq!(affine_data(t("D4~2")).adjacent_type, t("A5~2"));
        assert_eq!(affine_data(t("E6~2")).adjacent_type, t("E6~2"));
        assert_eq!(affine_data(t("D4~3")).adjacent_type, t("D4~3"));
        assert_eq!(affine_data(t("C2~1")).adjacent_type, t("C2~1"));
        assert_eq!(affine_data(t("A4~2")).adjacent_type, t("A4~2"));
        // involution at several ranks per family
        for name in ["A5~2", "A7~2", "A9~2", "D4~2", "D5~2", "D6~2", "E6~2", "D4~3", "A3~1", "B5~1", "C4~1", "D7~1"] {
            let d = affine_data(t(name));
            let dd = affine_data(d.adjacent_type);
            assert_eq!(dd.adjacent_type, t(name), "adjacency not involutive at {name}");
            assert_eq!(d.rank, dd.rank, "adjacent type must preserve rank at {name}");
            assert_eq!(d.dual_coxeter, dd.dual_coxeter, "adjacent type must preserve h-check at {name}");
        }
    }

    #[test]
    fn untwisted_marks_have_a0_equal_one_and_sum_to_coxeter_number() {
        let coxeter = [("A5~1", 6), ("B4~1", 8), ("C4~1", 8), ("D5~1", 8), ("E6~1", 12), ("E7~1", 18), ("E8~1", 30), ("F4~1", 12), ("G2~1", 6)];
        for (name, h) in coxeter {
            let d = affine_data(t(name));
            assert_eq!(d.marks[0], 1, "{name}");
            assert_eq!(d.marks.iter().sum::<i64>(), h, "Coxeter number of {name}");
        }
        // the one family with a_0 = 2
        assert_eq!(affine_data(t("A4~2")).marks[0], 2);
        assert_eq!(affine_data(t("A4~2")).comarks[0], 1);
    }

    #[test]
    fn squared_lengths_follow_marks_over_comarks() {
        // 2*av_i/a_i, finite nodes only
        let d = affine_data(t("E6~2"));
        let lens: Vec<f64> = (1..=4).map(|i| 2.0 * d.comarks[i] as f64 / d.marks[i] as f64).collect();
        assert_eq!(lens, vec![2.0, 2.0, 4.0, 4.0]); // nodes 3,4 long in E6~2
        let d = affine_data(t("F4~1"));
        let lens: Vec<f64> = (1..=4).map(|i| 2.0 * d.comarks[i] as f64 / d.marks[i] as f64).collect();
        assert_eq!(lens, vec![2.0, 2.0, 1.0, 1.0]); // nodes 1,2 long in F4~1
        let d = affine_data(t("D4~3"));
        let lens: Vec<f64> = (1..=2).map(|i| 2.0 * d.comarks[i] as f64 / d.marks[i] as f64).collect();
        assert_eq!(lens, vec![2.0, 6.0]); // node 2 long, ratio 3
    }
}
