//! Generators for the named graph families used as fixtures: paths,
//! cycles, stars, wheels, complete graphs, friendship graphs, and
//! complete multipartite graphs.
//!
//! Labeling is fixed so outputs match the usual pictures: paths and
//! cycles are numbered along the walk, the star and friendship centers
//! are vertex 1, the wheel center is vertex n, and multipartite parts
//! occupy consecutive label ranges in the order given.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named family plus its size parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `P_n`, n >= 1 vertices in a line.
    Path(usize),
    /// `C_n`, n >= 3 vertices in a circle.
    Cycle(usize),
    /// `K_{1,a}`, a >= 1 leaves around center 1.
    Star(usize),
    /// `W_n`, n >= 4 vertices: an (n-1)-cycle plus center n joined to all.
    Wheel(usize),
    /// `K_n`, n >= 1.
    Complete(usize),
    /// `F_k`, k >= 1 triangles sharing center 1: 2k+1 vertices, 3k edges.
    Friendship(usize),
    /// Complete multipartite graph; at least two parts, each nonempty.
    CompleteMultipartite(Vec<usize>),
}

impl Family {
    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamilyParams(msg));
        match self {
            Family::Path(n) if *n == 0 => bad("path needs at least 1 vertex".into()),
            Family::Cycle(n) if *n < 3 => bad(format!("cycle needs at least 3 vertices, got {n}")),
            Family::Star(a) if *a == 0 => bad("star needs at least 1 leaf".into()),
            Family::Wheel(n) if *n < 4 => bad(format!("wheel needs at least 4 vertices, got {n}")),
            Family::Complete(n) if *n == 0 => bad("complete graph needs at least 1 vertex".into()),
            Family::Friendship(k) if *k == 0 => bad("friendship graph needs at least 1 triangle".into()),
            Family::CompleteMultipartite(parts) if parts.len() < 2 => {
                bad("multipartite graph needs at least 2 parts".into())
            }
            Family::CompleteMultipartite(parts) if parts.iter().any(|&p| p == 0) => {
                bad("multipartite parts must be nonempty".into())
            }
            _ => Ok(()),
        }
    }
}

/// Builds the requested family member.
pub fn generate_family(family: &Family) -> Result<Graph> {
    family.check()?;
    match family {
        Family::Path(n) => {
            Graph::new(*n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
        }
        Family::Cycle(n) => {
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((n - 1, 0));
            Graph::new(*n, &edges)
        }
        Family::Star(a) => {
            Graph::new(a + 1, &(1..=*a).map(|v| (0, v)).collect::<Vec<_>>())
        }
        Family::Wheel(n) => {
            // Rim cycle on 1..n-1 (1-based), center n adjacent to the rim.
            let rim = n - 1;
            let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
            edges.extend((0..rim).map(|i| (rim, i)));
            Graph::new(*n, &edges)
        }
        Family::Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            Graph::new(*n, &edges)
        }
        Family::Friendship(k) => {
            let mut edges = Vec::new();
            for t in 0..*k {
                let (u, v) = (1 + 2 * t, 2 + 2 * t);
                edges.push((0, u));
                edges.push((0, v));
                edges.push((u, v));
            }
            Graph::new(2 * k + 1, &edges)
        }
        Family::CompleteMultipartite(parts) => {
            let n: usize = parts.iter().sum();
            let mut part_of = Vec::with_capacity(n);
            for (p, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat(p).take(size));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges)
        }
    }
}

pub fn path(n: usize) -> Result<Graph> {
    generate_family(&Family::Path(n))
}

pub fn cycle(n: usize) -> Result<Graph> {
    generate_family(&Family::Cycle(n))
}

pub fn star(a: usize) -> Result<Graph> {
    generate_family(&Family::Star(a))
}

pub fn wheel(n: usize) -> Result<Graph> {
    generate_family(&Family::Wheel(n))
}

pub fn complete(n: usize) -> Result<Graph> {
    generate_family(&Family::Complete(n))
}

pub fn friendship(k: usize) -> Result<Graph> {
    generate_family(&Family::Friendship(k))
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    generate_family(&Family::CompleteMultipartite(parts.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_counts_match_the_family_formulas() {
        for n in 1..=9 {
            assert_eq!(path(n).unwrap().num_edges(), n - 1);
        }
        for n in 3..=9 {
            assert_eq!(cycle(n).unwrap().num_edges(), n);
        }
        for a in 1..=9 {
            assert_eq!(star(a).unwrap().num_edges(), a);
        }
        for n in 4..=9 {
            assert_eq!(wheel(n).unwrap().num_edges(), 2 * (n - 1));
        }
        for n in 1..=9 {
            assert_eq!(complete(n).unwrap().num_edges(), n * (n - 1) / 2);
        }
        for k in 1..=5 {
            let g = friendship(k).unwrap();
            assert_eq!((g.n(), g.num_edges()), (2 * k + 1, 3 * k));
        }
    }

    #[test]
    fn all_family_members_are_connected() {
        let members = [
            path(7).unwrap(),
            cycle(6).unwrap(),
            star(5).unwrap(),
            wheel(8).unwrap(),
            complete(5).unwrap(),
            friendship(4).unwrap(),
            complete_multipartite(&[3, 4, 5]).unwrap(),
        ];
        for g in members {
            assert!(g.is_connected());
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        for family in [
            Family::Path(0),
            Family::Cycle(2),
            Family::Star(0),
            Family::Wheel(3),
            Family::Complete(0),
            Family::Friendship(0),
            Family::CompleteMultipartite(vec![4]),
            Family::CompleteMultipartite(vec![2, 0]),
        ] {
            assert!(matches!(
                generate_family(&family),
                Err(Error::InvalidFamilyParams(_))
            ));
        }
    }

    #[test]
    fn wheel_center_is_the_last_vertex() {
        let g = wheel(9).unwrap();
        assert_eq!(g.degree(8), 8);
        for v in 0..8 {
            assert_eq!(g.degree(v), 3);
        }
    }

    #[test]
    fn multipartite_parts_fill_consecutive_ranges() {
        // Parts {1..3}, {4..7}, {8..12} in 1-based labels.
        let g = complete_multipartite(&[3, 4, 5]).unwrap();
        assert_eq!(g.n(), 12);
        assert!(!g.has_edge(0, 2) && !g.has_edge(3, 6) && !g.has_edge(7, 11));
        assert!(g.has_edge(0, 3) && g.has_edge(3, 7) && g.has_edge(2, 11));
        let classes = g.twin_partition().classes_1based();
        assert_eq!(classes, vec![
            vec![1, 2, 3],
            vec![4, 5, 6, 7],
            vec![8, 9, 10, 11, 12]
        ]);
    }

    #[test]
    fn small_star_and_triangle_twins() {
        assert_eq!(star(4).unwrap().twin_partition().classes_1based(), vec![
            vec![1],
            vec![2, 3, 4, 5]
        ]);
        // The one-triangle friendship graph is K_3: all singleton classes.
        let f1 = friendship(1).unwrap();
        assert_eq!(f1.twin_partition().classes().len(), 3);
    }
}
