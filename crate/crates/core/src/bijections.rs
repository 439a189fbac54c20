//! Three statistic-preserving bijections out of the 132-avoiding permutations:
//! Dyck paths (Krattenthaler), non-decreasing parking functions, and decreasing
//! binary trees, together with the statistic each one translates.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{pack, Permutation};

// ---------------------------------------------------------------------------
// Dyck paths
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Up,
    Down,
}

/// A Dyck path: `2n` up/down steps from the axis back to the axis, never
/// dipping below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for s in &steps {
            match s {
                Step::Up => height += 1,
                Step::Down => height -= 1,
            }
            if height < 0 {
                return Err(Error::InvalidDyckPath("prefix dips below the axis".into()));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath("does not return to the axis".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of up steps (= number of down steps).
    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    /// Accepts the `UD` alphabet; `1`/`0` works too.
    fn from_str(s: &str) -> Result<Self> {
        let steps: Vec<Step> = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' | '1' => Ok(Step::Up),
                'D' | 'd' | '0' => Ok(Step::Down),
                _ => Err(Error::InvalidDyckPath(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<_>>()?;
        DyckPath::new(steps)
    }
}

/// Krattenthaler's bijection. Reading σ left to right, each value contributes
/// some up steps and one down step so that the height after its down step is
/// the number of greater values remaining to its right.
pub fn perm_to_dyck(sigma: &Permutation) -> Result<DyckPath> {
    if !sigma.avoids_132() {
        return Err(Error::Not132Avoiding);
    }
    let v = sigma.values();
    let n = v.len();
    let mut steps = Vec::with_capacity(2 * n);
    let mut height = 0i64;
    for i in 0..n {
        let target = (i + 1..n).filter(|&j| v[j] > v[i]).count() as i64;
        let ups = target + 1 - height;
        if ups < 0 {
            return Err(Error::Not132Avoiding);
        }
        for _ in 0..ups {
            steps.push(Step::Up);
        }
        steps.push(Step::Down);
        height = target;
    }
    DyckPath::new(steps)
}

/// Inverse of [`perm_to_dyck`]: recover the target heights from the down-step
/// endpoints, then σ_i is the (t_i + 1)-th largest value not yet used.
pub fn dyck_to_perm(path: &DyckPath) -> Permutation {
    let n = path.n();
    let mut targets = Vec::with_capacity(n);
    let mut height = 0usize;
    for s in path.steps() {
        match s {
            Step::Up => height += 1,
            Step::Down => {
                height -= 1;
                targets.push(height);
            }
        }
    }
    // unused values, largest first
    let mut unused: Vec<u32> = (1..=n as u32).rev().collect();
    let mut values = Vec::with_capacity(n);
    for t in targets {
        values.push(unused.remove(t));
    }
    Permutation::from_vec_unchecked(values)
}

/// Number of down steps whose endpoint height is at least `ell`.
pub fn down_steps_at_or_above(path: &DyckPath, ell: usize) -> usize {
    let mut height = 0usize;
    let mut count = 0;
    for s in path.steps() {
        match s {
            Step::Up => height += 1,
            Step::Down => {
                height -= 1;
                if height >= ell {
                    count += 1;
                }
            }
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Non-decreasing parking functions
// ---------------------------------------------------------------------------

/// A non-decreasing parking function: `f(i) ≤ f(i+1)` and `f(i) ≤ i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParkingFunction {
    values: Vec<u32>,
}

impl ParkingFunction {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            if v == 0 || v as usize > i + 1 {
                return Err(Error::InvalidParkingFunction(format!(
                    "f({}) = {v} exceeds its position",
                    i + 1
                )));
            }
            if i > 0 && v < values[i - 1] {
                return Err(Error::InvalidParkingFunction("not non-decreasing".into()));
            }
        }
        Ok(ParkingFunction { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Positions `i > 1` with `f(i) = i`, in increasing order.
    pub fn breakpoints(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i > 0 && v as usize == i + 1)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for ParkingFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values: Vec<u32> = s
            .trim()
            .split(',')
            .map(|t| {
                t.trim().parse::<u32>().map_err(|_| Error::Parse {
                    what: "parking function",
                    input: s.to_string(),
                })
            })
            .collect::<Result<_>>()?;
        ParkingFunction::new(values)
    }
}

/// φ(σ) = (mmp(0,n,0,0) + 1, ..., mmp(0,1,0,0) + 1).
///
/// Entry `j` is one more than the number of positions having at least
/// `n + 1 - j` greater values on their left.
pub fn phi(sigma: &Permutation) -> Result<ParkingFunction> {
    if !sigma.avoids_132() {
        return Err(Error::Not132Avoiding);
    }
    let v = sigma.values();
    let n = v.len();
    let greater_left: Vec<usize> = (0..n)
        .map(|i| (0..i).filter(|&j| v[j] > v[i]).count())
        .collect();
    let values = (1..=n)
        .map(|j| {
            let ell = n + 1 - j;
            greater_left.iter().filter(|&&g| g >= ell).count() as u32 + 1
        })
        .collect();
    ParkingFunction::new(values)
}

/// Inverse of φ: read the parking function left to right, bump every current
/// entry ≥ the value read, then prepend it.
pub fn phi_inverse(pf: &ParkingFunction) -> Permutation {
    let mut word: Vec<u32> = Vec::with_capacity(pf.len());
    for &v in pf.values() {
        for entry in word.iter_mut() {
            if *entry >= v {
                *entry += 1;
            }
        }
        word.insert(0, v);
    }
    Permutation::from_vec_unchecked(word)
}

// ---------------------------------------------------------------------------
// Binary trees
// ---------------------------------------------------------------------------

/// An unlabeled plane binary tree. `Leaf` is the empty tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Leaf,
    Node { left: Box<Shape>, right: Box<Shape> },
}

impl Shape {
    pub fn node(left: Shape, right: Shape) -> Self {
        Shape::Node {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Shape::Leaf => 0,
            Shape::Node { left, right } => 1 + left.size() + right.size(),
        }
    }

    /// Balanced-parenthesis encoding: empty → `""`, node → `"(" left ")" right`.
    pub fn to_parens(&self) -> String {
        let mut out = String::new();
        fn go(s: &Shape, out: &mut String) {
            if let Shape::Node { left, right } = s {
                out.push('(');
                go(left, out);
                out.push(')');
                go(right, out);
            }
        }
        go(self, &mut out);
        out
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.trim().as_bytes();
        fn parse(bytes: &[u8], pos: &mut usize) -> Result<Shape> {
            if *pos >= bytes.len() || bytes[*pos] != b'(' {
                return Ok(Shape::Leaf);
            }
            *pos += 1;
            let left = parse(bytes, pos)?;
            if *pos >= bytes.len() || bytes[*pos] != b')' {
                return Err(Error::InvalidTreeShape("unbalanced parentheses".into()));
            }
            *pos += 1;
            let right = parse(bytes, pos)?;
            Ok(Shape::node(left, right))
        }
        let mut pos = 0;
        let shape = parse(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::InvalidTreeShape(format!(
                "trailing input at offset {pos}"
            )));
        }
        Ok(shape)
    }
}

/// A labeled plane binary tree node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    pub label: u32,
    pub left: Option<Box<LabeledTree>>,
    pub right: Option<Box<LabeledTree>>,
}

impl LabeledTree {
    pub fn size(&self) -> usize {
        1 + self.left.as_ref().map_or(0, |t| t.size())
            + self.right.as_ref().map_or(0, |t| t.size())
    }

    pub fn shape(&self) -> Shape {
        fn go(t: &LabeledTree) -> Shape {
            Shape::node(
                t.left.as_ref().map_or(Shape::Leaf, |c| go(c)),
                t.right.as_ref().map_or(Shape::Leaf, |c| go(c)),
            )
        }
        go(self)
    }

    /// Every node's label exceeds the labels of all its descendants.
    pub fn is_decreasing(&self) -> bool {
        let ok_left = self
            .left
            .as_ref()
            .is_none_or(|c| c.label < self.label && c.is_decreasing());
        let ok_right = self
            .right
            .as_ref()
            .is_none_or(|c| c.label < self.label && c.is_decreasing());
        ok_left && ok_right
    }

    fn in_order(&self, out: &mut Vec<u32>) {
        if let Some(l) = &self.left {
            l.in_order(out);
        }
        out.push(self.label);
        if let Some(r) = &self.right {
            r.in_order(out);
        }
    }
}

/// Decreasing-tree construction: the root holds the maximum, the prefix
/// before it builds the left subtree, the suffix after it the right one.
pub fn perm_to_tree(sigma: &Permutation) -> Result<LabeledTree> {
    if !sigma.avoids_132() {
        return Err(Error::Not132Avoiding);
    }
    if sigma.is_empty() {
        return Err(Error::InvalidPermutation(
            "the empty permutation has no tree".into(),
        ));
    }
    fn build(word: &[u32]) -> Option<Box<LabeledTree>> {
        if word.is_empty() {
            return None;
        }
        let (max_idx, &label) = word
            .iter()
            .enumerate()
            .max_by_key(|&(_, v)| v)
            .expect("nonempty");
        Some(Box::new(LabeledTree {
            label,
            left: build(&word[..max_idx]),
            right: build(&word[max_idx + 1..]),
        }))
    }
    Ok(*build(sigma.values()).expect("nonempty"))
}

/// In-order reading of a decreasing tree ("gravity").
pub fn tree_to_perm(tree: &LabeledTree) -> Result<Permutation> {
    if !tree.is_decreasing() {
        return Err(Error::NotDecreasingLabels);
    }
    let mut word = Vec::with_capacity(tree.size());
    tree.in_order(&mut word);
    Permutation::new(word)
}

/// The unique decreasing labeling: labels `n, n-1, ..., 1` assigned along a
/// preorder traversal. Returns `None` for the empty shape.
pub fn canonical_decreasing_labels(shape: &Shape) -> Option<LabeledTree> {
    fn go(shape: &Shape, next: &mut u32) -> Option<Box<LabeledTree>> {
        match shape {
            Shape::Leaf => None,
            Shape::Node { left, right } => {
                let label = *next;
                *next -= 1;
                let l = go(left, next);
                let r = go(right, next);
                Some(Box::new(LabeledTree {
                    label,
                    left: l,
                    right: r,
                }))
            }
        }
    }
    let mut next = shape.size() as u32;
    go(shape, &mut next).map(|b| *b)
}

/// Number of nodes whose left subtree has at least `ell` nodes.
/// For `ell = 1` this is the number of left branches.
pub fn left_subtrees_at_least(shape: &Shape, ell: usize) -> usize {
    fn go(shape: &Shape, ell: usize) -> (usize, usize) {
        match shape {
            Shape::Leaf => (0, 0),
            Shape::Node { left, right } => {
                let (ls, lc) = go(left, ell);
                let (rs, rc) = go(right, ell);
                let hit = usize::from(ls >= ell);
                (1 + ls + rs, lc + rc + hit)
            }
        }
    }
    go(shape, ell).1
}

/// All plane binary tree shapes with `n` nodes.
pub fn all_shapes(n: usize) -> Vec<Shape> {
    let mut memo: Vec<Vec<Shape>> = vec![vec![Shape::Leaf]];
    for m in 1..=n {
        let mut shapes = Vec::new();
        for left in 0..m {
            let right = m - 1 - left;
            for l in memo[left].clone() {
                for r in &memo[right] {
                    shapes.push(Shape::node(l.clone(), r.clone()));
                }
            }
        }
        memo.push(shapes);
    }
    memo.pop().expect("built up to n")
}

/// First value of `pack(σ_ell ... σ_n)`.
pub fn suffix_pack_first_value(sigma: &Permutation, ell: usize) -> Result<u32> {
    if ell == 0 || ell > sigma.len() {
        return Err(Error::PositionOutOfRange {
            pos: ell,
            len: sigma.len(),
        });
    }
    let packed = pack(&sigma.values()[ell - 1..])?;
    Ok(packed.values()[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::MeshPattern;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    const GOLDEN_DYCK: &str = "UUUDUDDDUUDDUUDUDD";

    /// Independent construction from the definition: the height after each
    /// value's down step must equal the number of greater values to its right.
    fn dyck_oracle(sigma: &Permutation) -> String {
        let v = sigma.values();
        let n = v.len();
        let mut out = String::new();
        let mut height = 0i64;
        for i in 0..n {
            let target = (i + 1..n).filter(|&j| v[j] > v[i]).count() as i64;
            while height <= target {
                out.push('U');
                height += 1;
            }
            out.push('D');
            height -= 1;
        }
        out
    }

    #[test]
    fn golden_dyck_word_matches_oracle() {
        assert_eq!(dyck_oracle(&p("768945213")), GOLDEN_DYCK);
    }

    #[test]
    fn perm_to_dyck_examples() {
        assert_eq!(perm_to_dyck(&p("768945213")).unwrap().to_string(), GOLDEN_DYCK);
        assert_eq!(perm_to_dyck(&p("1")).unwrap().to_string(), "UD");
        assert_eq!(
            perm_to_dyck(&Permutation::decreasing(4)).unwrap().to_string(),
            "UDUDUDUD"
        );
        // identity: target heights n-1, n-2, ..., 0
        assert_eq!(perm_to_dyck(&p("123")).unwrap().to_string(), "UUUDDD");
        assert_eq!(perm_to_dyck(&p("132")).unwrap_err(), Error::Not132Avoiding);
    }

    #[test]
    fn dyck_to_perm_examples() {
        assert_eq!(
            dyck_to_perm(&"UDUDUDUD".parse().unwrap()),
            Permutation::decreasing(4)
        );
        assert_eq!(
            dyck_to_perm(&GOLDEN_DYCK.parse().unwrap()),
            p("768945213")
        );
    }

    #[test]
    fn dyck_path_validation() {
        assert!("UDD".parse::<DyckPath>().is_err());
        assert!("UDU".parse::<DyckPath>().is_err());
        assert!("DU".parse::<DyckPath>().is_err());
        assert!("UXD".parse::<DyckPath>().is_err());
        assert_eq!("1100".parse::<DyckPath>().unwrap().to_string(), "UUDD");
    }

    #[test]
    fn down_steps_examples() {
        assert_eq!(down_steps_at_or_above(&"UDUDUDUD".parse().unwrap(), 1), 0);
        let path: DyckPath = GOLDEN_DYCK.parse().unwrap();
        assert_eq!(down_steps_at_or_above(&path, 1), 6);
        assert_eq!(p("768945213").mmp(&MeshPattern::new(1, 0, 0, 0)), 6);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(
            phi(&p("768945213")).unwrap().values(),
            &[1, 1, 2, 4, 4, 6, 6, 6, 7]
        );
        assert_eq!(phi(&p("1")).unwrap().values(), &[1]);
        assert_eq!(
            phi(&Permutation::decreasing(5)).unwrap().values(),
            &[1, 2, 3, 4, 5]
        );
        assert_eq!(phi(&p("132")).unwrap_err(), Error::Not132Avoiding);
    }

    #[test]
    fn phi_inverse_examples() {
        let pf: ParkingFunction = "1,1,2,4,4,6,6,6,7".parse().unwrap();
        assert_eq!(phi_inverse(&pf), p("768945213"));
        assert_eq!(phi_inverse(&"1".parse().unwrap()), p("1"));
        assert_eq!(
            phi_inverse(&"1,1,1,1".parse().unwrap()),
            Permutation::identity(4)
        );
    }

    #[test]
    fn parking_function_validation() {
        assert!("1,3".parse::<ParkingFunction>().is_err());
        assert!("1,2,1".parse::<ParkingFunction>().is_err());
        assert!("2".parse::<ParkingFunction>().is_err());
        assert!("0".parse::<ParkingFunction>().is_err());
    }

    #[test]
    fn breakpoints_examples() {
        let pf: ParkingFunction = "1,1,2,4,4,6,6,6,7".parse().unwrap();
        assert_eq!(pf.breakpoints(), vec![4, 6]);
        assert!("1,1,1".parse::<ParkingFunction>().unwrap().breakpoints().is_empty());
        assert_eq!("1,2,3".parse::<ParkingFunction>().unwrap().breakpoints(), vec![2, 3]);
    }

    #[test]
    fn tree_of_worked_example() {
        let tree = perm_to_tree(&p("768945213")).unwrap();
        assert_eq!(tree.label, 9);
        let left = tree.left.as_ref().unwrap();
        let right = tree.right.as_ref().unwrap();
        let mut lw = Vec::new();
        left.in_order(&mut lw);
        assert_eq!(lw, vec![7, 6, 8]);
        let mut rw = Vec::new();
        right.in_order(&mut rw);
        assert_eq!(rw, vec![4, 5, 2, 1, 3]);
        assert_eq!(tree_to_perm(&tree).unwrap(), p("768945213"));
    }

    #[test]
    fn comb_shapes() {
        // identity -> left comb (every maximum sits at the end)
        let tree = perm_to_tree(&Permutation::identity(5)).unwrap();
        fn no_right_child(t: &LabeledTree) -> bool {
            t.right.is_none() && t.left.as_ref().is_none_or(|c| no_right_child(c))
        }
        assert!(no_right_child(&tree));
        // decreasing -> right comb
        let tree = perm_to_tree(&Permutation::decreasing(5)).unwrap();
        fn no_left_child(t: &LabeledTree) -> bool {
            t.left.is_none() && t.right.as_ref().is_none_or(|c| no_left_child(c))
        }
        assert!(no_left_child(&tree));
        assert_eq!(left_subtrees_at_least(&tree.shape(), 1), 0);
    }

    #[test]
    fn canonical_labels_examples() {
        // left comb on 3 nodes: root 3, left child 2, left-left 1; in-order 123
        let left_comb: Shape = "((()))".parse().unwrap();
        let labeled = canonical_decreasing_labels(&left_comb).unwrap();
        assert_eq!(tree_to_perm(&labeled).unwrap(), p("123"));
        // right comb: in-order is the decreasing word
        let right_comb: Shape = "()()()".parse().unwrap();
        let labeled = canonical_decreasing_labels(&right_comb).unwrap();
        assert_eq!(tree_to_perm(&labeled).unwrap(), p("321"));
        assert!(canonical_decreasing_labels(&Shape::Leaf).is_none());
        let single = canonical_decreasing_labels(&"()".parse().unwrap()).unwrap();
        assert_eq!(single.label, 1);
    }

    #[test]
    fn canonical_labels_match_perm_to_tree() {
        for sigma in crate::distribution::avoiders_132(6) {
            let tree = perm_to_tree(&sigma).unwrap();
            let relabeled = canonical_decreasing_labels(&tree.shape()).unwrap();
            assert_eq!(relabeled, tree);
        }
    }

    #[test]
    fn parens_round_trip() {
        for shape in all_shapes(5) {
            let parsed: Shape = shape.to_parens().parse().unwrap();
            assert_eq!(parsed, shape);
        }
        assert!("(()".parse::<Shape>().is_err());
        assert!("())".parse::<Shape>().is_err());
    }

    #[test]
    fn left_subtrees_distribution_n4() {
        // 5 + 7x + 2x^2 over the fourteen shapes with ell = 2
        let mut tally = [0usize; 3];
        let shapes = all_shapes(4);
        assert_eq!(shapes.len(), 14);
        for s in &shapes {
            tally[left_subtrees_at_least(s, 2)] += 1;
        }
        assert_eq!(tally, [5, 7, 2]);
    }

    #[test]
    fn tree_of_worked_example_left_branches() {
        let tree = perm_to_tree(&p("768945213")).unwrap();
        assert_eq!(left_subtrees_at_least(&tree.shape(), 1), 4);
    }

    #[test]
    fn non_decreasing_labels_rejected() {
        let bad = LabeledTree {
            label: 1,
            left: Some(Box::new(LabeledTree {
                label: 2,
                left: None,
                right: None,
            })),
            right: None,
        };
        assert_eq!(tree_to_perm(&bad).unwrap_err(), Error::NotDecreasingLabels);
    }

    #[test]
    fn suffix_pack_examples() {
        assert_eq!(suffix_pack_first_value(&p("3412"), 2).unwrap(), 3);
        assert_eq!(suffix_pack_first_value(&p("4231"), 2).unwrap(), 2);
        assert_eq!(suffix_pack_first_value(&p("3412"), 1).unwrap(), 3);
        assert!(suffix_pack_first_value(&p("3412"), 5).is_err());
        assert!(suffix_pack_first_value(&p("3412"), 0).is_err());
    }
}
