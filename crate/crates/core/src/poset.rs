//! Finite posets of exponent vectors under componentwise order, with an
//! adjoined bottom element, cover relations, one-sum labellings and the
//! Möbius function from the bottom.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};
use crate::num::Coeff;
use crate::poly::ExpVec;

/// Above this many bounding-box cells the labelling falls back from the
/// prefix-sum grid to plain pairwise down-set sums.
const DENSE_CELL_LIMIT: u128 = 1 << 22;

/// An order-convex set of exponent vectors below a ceiling, plus a unique
/// bottom element distinct from the zero vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorPoset {
    width: usize,
    ceiling: ExpVec,
    minimals: Vec<ExpVec>,
    elements: Vec<ExpVec>,
}

/// A vertex of the Hasse diagram: the adjoined bottom or a vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum PosetNode {
    Bottom,
    Element(ExpVec),
}

impl fmt::Display for PosetNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetNode::Bottom => write!(f, "0̂"),
            PosetNode::Element(v) => write!(f, "{v}"),
        }
    }
}

/// Builds the union of boxes `[m, ceiling]` over the given minimal elements.
pub fn build_poset(minimals: &[ExpVec], ceiling: &ExpVec) -> Result<VectorPoset> {
    if minimals.is_empty() {
        return Err(Error::EmptySupport);
    }
    let width = ceiling.width();
    let mut mins = Vec::with_capacity(minimals.len());
    for m in minimals {
        if m.width() != width {
            return Err(Error::WidthMismatch {
                left: width,
                right: m.width(),
            });
        }
        if !m.leq(ceiling) {
            return Err(Error::InfeasiblePoset {
                minimal: m.to_string(),
                ceiling: ceiling.to_string(),
            });
        }
        mins.push(m.clone());
    }
    mins.sort();
    mins.dedup();
    for (i, a) in mins.iter().enumerate() {
        for b in &mins[i + 1..] {
            assert!(
                !a.leq(b) && !b.leq(a),
                "minimal elements must form an antichain: {a} vs {b}"
            );
        }
    }

    let lower = componentwise_min(&mins, width);
    let mut elements = Vec::new();
    let mut cur = lower.clone();
    'outer: loop {
        let v = ExpVec::new(cur.clone());
        if mins.iter().any(|m| m.leq(&v)) {
            elements.push(v);
        }
        // odometer step, most significant coordinate first => lex order
        let mut j = width;
        while j > 0 {
            j -= 1;
            if cur[j] < ceiling.get(j) {
                cur[j] += 1;
                for k in j + 1..width {
                    cur[k] = lower[k];
                }
                continue 'outer;
            }
        }
        break;
    }

    Ok(VectorPoset {
        width,
        ceiling: ceiling.clone(),
        minimals: mins,
        elements,
    })
}

fn componentwise_min(vs: &[ExpVec], width: usize) -> Vec<u32> {
    let mut lower = vs[0].entries().to_vec();
    for v in &vs[1..] {
        for j in 0..width {
            lower[j] = lower[j].min(v.get(j));
        }
    }
    lower
}

impl VectorPoset {
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of elements, not counting the bottom.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in lexicographic order, bottom excluded.
    pub fn elements(&self) -> &[ExpVec] {
        &self.elements
    }

    pub fn ceiling(&self) -> &ExpVec {
        &self.ceiling
    }

    pub fn minimals(&self) -> &[ExpVec] {
        &self.minimals
    }

    pub fn contains(&self, v: &ExpVec) -> bool {
        self.elements.binary_search(v).is_ok()
    }

    /// Cover relations of the Hasse diagram. By order-convexity the covers
    /// among vectors are exactly the unit steps `a -> a + e_i`; the bottom is
    /// covered by nothing and covers nothing except that each minimal element
    /// covers it.
    pub fn covers(&self) -> Vec<(PosetNode, ExpVec)> {
        let mut edges: Vec<(PosetNode, ExpVec)> = self
            .minimals
            .iter()
            .map(|m| (PosetNode::Bottom, m.clone()))
            .collect();
        for b in &self.elements {
            for j in 0..self.width {
                if let Some(a) = b.lowered(j) {
                    if self.contains(&a) {
                        edges.push((PosetNode::Element(a), b.clone()));
                    }
                }
            }
        }
        edges
    }

    /// The unique labelling `nu` with `sum_{q <= p} nu(q) = 1` for every
    /// element `p`, computed by increasing total degree. Down-set partial
    /// sums come from a prefix-sum grid over the bounding box when that box
    /// is small enough, and from direct pairwise comparison otherwise.
    pub fn one_sum_labelling<C: Coeff>(&self) -> Labelling<C> {
        let nu = if self.box_cells() <= DENSE_CELL_LIMIT {
            self.labelling_dense()
        } else {
            self.labelling_pairwise()
        };
        Labelling { nu }
    }

    /// Same data viewed as the Möbius function from the bottom:
    /// `mu(0̂, beta) = -nu(beta)` and `mu(0̂, 0̂) = 1`.
    pub fn mobius_from_bottom<C: Coeff>(&self) -> Labelling<C> {
        self.one_sum_labelling()
    }

    fn box_cells(&self) -> u128 {
        if self.elements.is_empty() {
            return 0;
        }
        let lower = componentwise_min(&self.minimals, self.width);
        (0..self.width)
            .map(|j| (self.ceiling.get(j) - lower[j] + 1) as u128)
            .product()
    }

    fn levels(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut levels: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, v) in self.elements.iter().enumerate() {
            levels.entry(v.total_degree()).or_default().push(i);
        }
        levels
    }

    fn labelling_dense<C: Coeff>(&self) -> BTreeMap<ExpVec, C> {
        let width = self.width;
        let lower = componentwise_min(&self.minimals, width);
        let sizes: Vec<usize> = (0..width)
            .map(|j| (self.ceiling.get(j) - lower[j] + 1) as usize)
            .collect();
        let mut strides = vec![1usize; width];
        for j in (0..width.saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * sizes[j + 1];
        }
        let cells: usize = sizes.iter().product();
        let index = |v: &ExpVec| -> usize {
            (0..width)
                .map(|j| (v.get(j) - lower[j]) as usize * strides[j])
                .sum()
        };

        let mut grid = vec![C::zero(); cells];
        let mut out = BTreeMap::new();
        for (_, level) in self.levels() {
            // Down-set sums of everything labelled so far; elements on the
            // same level are incomparable and cannot see each other.
            let mut prefix = grid.clone();
            for j in 0..width {
                if sizes[j] == 1 {
                    continue;
                }
                for idx in 0..cells {
                    if (idx / strides[j]) % sizes[j] > 0 {
                        let prev = prefix[idx - strides[j]].clone();
                        let cur = std::mem::replace(&mut prefix[idx], C::zero());
                        prefix[idx] = cur + prev;
                    }
                }
            }
            for &i in &level {
                let v = &self.elements[i];
                let nu = C::one() - prefix[index(v)].clone();
                grid[index(v)] = nu.clone();
                out.insert(v.clone(), nu);
            }
        }
        out
    }

    fn labelling_pairwise<C: Coeff>(&self) -> BTreeMap<ExpVec, C> {
        let mut order: Vec<usize> = (0..self.elements.len()).collect();
        order.sort_by_key(|&i| self.elements[i].total_degree());
        let mut nus: Vec<Option<C>> = vec![None; self.elements.len()];
        for (pos, &i) in order.iter().enumerate() {
            let v = &self.elements[i];
            let mut sum = C::zero();
            for &j in &order[..pos] {
                if self.elements[j].leq(v) {
                    sum = sum + nus[j].clone().expect("labelled in degree order");
                }
            }
            nus[i] = Some(C::one() - sum);
        }
        self.elements
            .iter()
            .cloned()
            .zip(nus.into_iter().map(|c| c.unwrap()))
            .collect()
    }

    /// DOT digraph with edges from lower to upper cover; node names are the
    /// trimmed vector strings and the bottom renders as `0̂`.
    pub fn to_dot<C: Coeff>(&self, labels: Option<&Labelling<C>>) -> String {
        let mut s = String::from("digraph poset {\n  rankdir=BT;\n");
        s.push_str("  \"0̂\";\n");
        for v in &self.elements {
            match labels.and_then(|l| l.nu(v)) {
                Some(nu) => {
                    s.push_str(&format!("  \"{v}\" [label=\"{v}\\nν={nu}\"];\n"));
                }
                None => s.push_str(&format!("  \"{v}\";\n")),
            }
        }
        for (a, b) in self.covers() {
            s.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
        }
        s.push('}');
        s.push('\n');
        s
    }

    pub fn to_json<C: Coeff>(&self, labels: &Labelling<C>) -> serde_json::Value {
        let as_i64 = |c: &C| {
            c.to_i64()
                .expect("Möbius label does not fit a 64-bit JSON integer")
        };
        let mut nu = serde_json::Map::new();
        let mut mu = serde_json::Map::new();
        for (v, c) in labels.iter() {
            nu.insert(v.key_string(), json!(as_i64(c)));
            mu.insert(v.key_string(), json!(as_i64(&-c.clone())));
        }
        json!({
            "ceiling": self.ceiling.entries(),
            "elements": self.elements.iter().map(|e| e.entries().to_vec()).collect::<Vec<_>>(),
            "nu": nu,
            "mu": mu,
        })
    }
}

/// One-sum labels on the elements of a [`VectorPoset`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Labelling<C> {
    nu: BTreeMap<ExpVec, C>,
}

impl<C: Coeff> Labelling<C> {
    pub fn nu(&self, v: &ExpVec) -> Option<&C> {
        self.nu.get(v)
    }

    /// `mu(0̂, v) = -nu(v)`.
    pub fn mu_from_bottom(&self, v: &ExpVec) -> Option<C> {
        self.nu.get(v).map(|c| -c.clone())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExpVec, &C)> {
        self.nu.iter()
    }

    pub fn len(&self) -> usize {
        self.nu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nu.is_empty()
    }
}
