//! The Tamari order on 132-avoiding permutations, realized through rotations
//! on their decreasing binary trees, and the interval/ideal structure of the
//! sets S(n, k).

use std::collections::{HashMap, VecDeque};

use crate::bijections::{canonical_decreasing_labels, perm_to_tree, tree_to_perm, Shape};
use crate::distribution::avoiders_132;
use crate::error::{Error, Result};
use crate::perm::{pack, Composition, MeshPattern, Permutation};

/// All shapes reachable by one upward rotation: a node's left child is
/// promoted above it (`(p=(A,B), C)` becomes `(A, (B,C))`). With this
/// orientation the identity permutation (a left comb) is the unique minimum.
fn upward_rotations(shape: &Shape) -> Vec<Shape> {
    let mut out = Vec::new();
    if let Shape::Node { left, right } = shape {
        if let Shape::Node {
            left: a,
            right: b,
        } = left.as_ref()
        {
            out.push(Shape::node(
                a.as_ref().clone(),
                Shape::node(b.as_ref().clone(), right.as_ref().clone()),
            ));
        }
        for l in upward_rotations(left) {
            out.push(Shape::node(l, right.as_ref().clone()));
        }
        for r in upward_rotations(right) {
            out.push(Shape::node(left.as_ref().clone(), r));
        }
    }
    out
}

fn shape_to_perm(shape: &Shape) -> Permutation {
    match canonical_decreasing_labels(shape) {
        Some(tree) => tree_to_perm(&tree).expect("canonical labels are decreasing"),
        None => Permutation::new(vec![]).expect("empty"),
    }
}

/// Upper covers of a 132-avoiding permutation in the Tamari order.
pub fn tamari_covers(sigma: &Permutation) -> Result<Vec<Permutation>> {
    if !sigma.avoids_132() {
        return Err(Error::Not132Avoiding);
    }
    if sigma.len() <= 1 {
        return Ok(Vec::new());
    }
    let shape = perm_to_tree(sigma)?.shape();
    let mut covers: Vec<Permutation> = upward_rotations(&shape)
        .iter()
        .map(shape_to_perm)
        .collect();
    covers.sort();
    covers.dedup();
    Ok(covers)
}

/// Tamari comparability by breadth-first search in the cover relation.
pub fn tamari_leq(sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    if sigma.len() != tau.len() {
        return Err(Error::LengthMismatch(sigma.len(), tau.len()));
    }
    if !sigma.avoids_132() || !tau.avoids_132() {
        return Err(Error::Not132Avoiding);
    }
    if sigma == tau {
        return Ok(true);
    }
    let mut seen = std::collections::HashSet::new();
    let mut queue = VecDeque::from([sigma.clone()]);
    seen.insert(sigma.clone());
    while let Some(current) = queue.pop_front() {
        for cover in tamari_covers(&current)? {
            if &cover == tau {
                return Ok(true);
            }
            if seen.insert(cover.clone()) {
                queue.push_back(cover);
            }
        }
    }
    Ok(false)
}

/// The full Tamari poset on `S_n(132)`, elements in lexicographic order.
pub struct TamariPoset {
    n: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl TamariPoset {
    pub fn new(n: usize) -> Self {
        let elements = avoiders_132(n);
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut upper = vec![Vec::new(); elements.len()];
        let mut lower = vec![Vec::new(); elements.len()];
        for (i, sigma) in elements.iter().enumerate() {
            for cover in tamari_covers(sigma).expect("elements avoid 132") {
                let j = index[&cover];
                upper[i].push(j);
                lower[j].push(i);
            }
        }
        TamariPoset {
            n,
            elements,
            index,
            upper,
            lower,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, sigma: &Permutation) -> Option<usize> {
        self.index.get(sigma).copied()
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    fn reachable(&self, start: usize, adjacency: &[Vec<usize>]) -> Vec<bool> {
        let mut seen = vec![false; self.elements.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &j in &adjacency[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen
    }

    /// Membership mask of the principal filter `{x : base ≤ x}`.
    pub fn up_set(&self, base: usize) -> Vec<bool> {
        self.reachable(base, &self.upper)
    }

    /// Membership mask of the principal ideal `{x : x ≤ top}`.
    pub fn down_set(&self, top: usize) -> Vec<bool> {
        self.reachable(top, &self.lower)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up_set(i)[j]
    }
}

/// `S(n, k)`: the 132-avoiders also avoiding the pattern `(0, k, 0, 0)`.
/// `S(n, 0)` is the empty set by convention.
pub fn s_set(n: usize, k: usize) -> Vec<Permutation> {
    if k == 0 {
        return Vec::new();
    }
    let pattern = MeshPattern::new(0, k, 0, 0);
    avoiders_132(n)
        .into_iter()
        .filter(|sigma| sigma.mmp(&pattern) == 0)
        .collect()
}

/// Remove-1-then-pack applied to `S(n, k) \ S(n, k-1)`; the image is
/// `S(n-1, k)`.
pub fn s_set_difference_projection(n: usize, k: usize) -> Vec<Permutation> {
    let smaller: std::collections::HashSet<Permutation> = s_set(n, k - 1).into_iter().collect();
    let mut out: Vec<Permutation> = s_set(n, k)
        .into_iter()
        .filter(|sigma| !smaller.contains(sigma))
        .map(|sigma| {
            let word: Vec<u32> = sigma.values().iter().copied().filter(|&v| v != 1).collect();
            pack(&word).expect("distinct values")
        })
        .collect();
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Smallest,
    Greatest,
}

/// The Tamari-smallest or -greatest 132-avoider of a given descent
/// composition, found by exhaustive scan of the class.
pub fn extreme_of_descent_class(comp: &Composition, which: Extreme) -> Result<Permutation> {
    let n = comp.sum();
    let class: Vec<Permutation> = avoiders_132(n)
        .into_iter()
        .filter(|sigma| &sigma.descent_composition() == comp)
        .collect();
    if class.is_empty() {
        return Err(Error::EmptyDescentClass(comp.parts().to_vec()));
    }
    let poset = TamariPoset::new(n);
    let indices: Vec<usize> = class
        .iter()
        .map(|p| poset.index_of(p).expect("class member in poset"))
        .collect();
    for &i in &indices {
        let mask = match which {
            Extreme::Greatest => poset.down_set(i),
            Extreme::Smallest => poset.up_set(i),
        };
        if indices.iter().all(|&j| mask[j]) {
            return Ok(poset.elements()[i].clone());
        }
    }
    Err(Error::NoExtremeElement(match which {
        Extreme::Smallest => "smallest",
        Extreme::Greatest => "greatest",
    }))
}

/// Outcome of checking the interval claims for one `(n, k)`.
#[derive(Debug, Clone)]
pub struct IntervalReport {
    pub n: usize,
    pub k: usize,
    pub pass: bool,
    /// `t(1^{k-1}, n-k+1)`, top of the interval equal to `S(n, k)`.
    pub interval_top: Option<Permutation>,
    /// `s(k-1, n-k+1)`, bottom of the interval equal to `S(n,k) \ S(n,k-1)`.
    pub difference_bottom: Option<Permutation>,
    pub failures: Vec<String>,
}

/// Checks that `S(n, k) = [id, t(1^{k-1}, n-k+1)]` and that
/// `S(n, k) \ S(n, k-1) = [s(k-1, n-k+1), t(1^{k-1}, n-k+1)]`.
pub fn verify_interval_structure(n: usize, k: usize) -> IntervalReport {
    let mut report = IntervalReport {
        n,
        k,
        pass: true,
        interval_top: None,
        difference_bottom: None,
        failures: Vec::new(),
    };
    let fail = |report: &mut IntervalReport, msg: String| {
        report.pass = false;
        report.failures.push(msg);
    };

    let poset = TamariPoset::new(n);
    let mut top_parts = vec![1usize; k - 1];
    top_parts.push(n - k + 1);
    let top_comp = Composition::new(top_parts).expect("positive parts");
    let top = match extreme_of_descent_class(&top_comp, Extreme::Greatest) {
        Ok(t) => t,
        Err(e) => {
            fail(&mut report, format!("no greatest element for t: {e}"));
            return report;
        }
    };
    report.interval_top = Some(top.clone());

    // (i) S(n, k) is the principal ideal below t.
    let down = poset.down_set(poset.index_of(&top).expect("top in poset"));
    let members = s_set(n, k);
    let member_mask: Vec<bool> = poset
        .elements()
        .iter()
        .map(|p| members.binary_search(p).is_ok())
        .collect();
    if member_mask != down {
        for (i, (m, d)) in member_mask.iter().zip(&down).enumerate() {
            if m != d {
                fail(
                    &mut report,
                    format!(
                        "S({n},{k}) vs [id, {top}]: witness {}",
                        poset.elements()[i]
                    ),
                );
                break;
            }
        }
    }

    // (ii) the difference S(n,k) \ S(n,k-1) is itself an interval.
    let bottom = if k == 1 {
        // the class of composition (n) is the identity alone
        Ok(Permutation::identity(n))
    } else {
        let bottom_comp = Composition::new(vec![k - 1, n - k + 1]).expect("positive parts");
        extreme_of_descent_class(&bottom_comp, Extreme::Smallest)
    };
    let bottom = match bottom {
        Ok(b) => b,
        Err(e) => {
            fail(&mut report, format!("no smallest element for s: {e}"));
            return report;
        }
    };
    report.difference_bottom = Some(bottom.clone());

    let smaller: std::collections::HashSet<Permutation> = s_set(n, k - 1).into_iter().collect();
    let difference: Vec<bool> = poset
        .elements()
        .iter()
        .map(|p| members.binary_search(p).is_ok() && !smaller.contains(p))
        .collect();
    let up_of_bottom = poset.up_set(poset.index_of(&bottom).expect("bottom in poset"));
    let interval: Vec<bool> = up_of_bottom
        .iter()
        .zip(&down)
        .map(|(&a, &b)| a && b)
        .collect();
    if difference != interval {
        for (i, (d, iv)) in difference.iter().zip(&interval).enumerate() {
            if d != iv {
                fail(
                    &mut report,
                    format!(
                        "S({n},{k})\\S({n},{}) vs [{bottom}, {top}]: witness {}",
                        k - 1,
                        poset.elements()[i]
                    ),
                );
                break;
            }
        }
    }
    report
}

/// Outcome of checking closure of `I(n, k, ℓ) = {σ : mmp(0,k,0,0)(σ) ≤ ℓ}`
/// under the Tamari order, in both directions.
#[derive(Debug, Clone)]
pub struct IdealReport {
    pub n: usize,
    pub k: usize,
    pub ell: usize,
    pub member_count: usize,
    pub downward_closed: bool,
    pub upward_closed: bool,
    /// A member whose lower cover escapes the set, if any.
    pub down_witness: Option<(Permutation, Permutation)>,
}

/// Tests whether the set of avoiders with statistic at most `ell` is closed
/// under going down (and, for the record, up) in the Tamari order.
pub fn verify_ideal(n: usize, k: usize, ell: usize) -> IdealReport {
    let poset = TamariPoset::new(n);
    let pattern = MeshPattern::new(0, k, 0, 0);
    let member: Vec<bool> = poset
        .elements()
        .iter()
        .map(|p| p.mmp(&pattern) <= ell)
        .collect();
    let mut report = IdealReport {
        n,
        k,
        ell,
        member_count: member.iter().filter(|&&m| m).count(),
        downward_closed: true,
        upward_closed: true,
        down_witness: None,
    };
    for (i, &m) in member.iter().enumerate() {
        if !m {
            continue;
        }
        for &j in poset.lower_covers(i) {
            if !member[j] {
                report.downward_closed = false;
                if report.down_witness.is_none() {
                    report.down_witness = Some((
                        poset.elements()[i].clone(),
                        poset.elements()[j].clone(),
                    ));
                }
            }
        }
        for &j in poset.upper_covers(i) {
            if !member[j] {
                report.upward_closed = false;
            }
        }
    }
    report
}
