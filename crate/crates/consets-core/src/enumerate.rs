//! Enumeration of connected vertex sets.
//!
//! Sets are generated by anchored binary partition. For each anchor vertex
//! `r` (the smallest vertex of every set it produces), the search keeps a
//! frontier of undecided neighbors of the current set among the vertices
//! above `r`. Extending by the lowest frontier vertex and banning it for the
//! later siblings splits the remaining sets into disjoint classes, so every
//! connected set is produced exactly once, with constant amortized work per
//! set beyond the word operations.
//!
//! The order is deterministic: anchors increase, and within an anchor the
//! sets appear in the preorder of this fixed expansion. Anchors partition
//! the collection, which is what [`crate::stats::stats_for_anchor`] exploits
//! for parallel runs.

use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};

/// One node of the expansion tree: the current set, the undecided frontier,
/// and the vertices banned from this entire subtree.
#[derive(Clone, Copy)]
pub(crate) struct Frame {
    pub set: u64,
    pub ext: u64,
    pub banned: u64,
}

impl Frame {
    /// Root frame of the expansion for anchor `r`: the singleton `{r}` with
    /// the neighbors of `r` above `r` as frontier.
    #[inline]
    pub fn anchor_root(g: &Graph, r: usize) -> Frame {
        Frame {
            set: 1u64 << r,
            ext: g.adjacency(r) & above(r),
            banned: 0,
        }
    }

    /// Splits off the child that includes the lowest frontier vertex,
    /// updating `self` to be the remainder (that vertex banned).
    ///
    /// Must only be called while `self.ext != 0`.
    #[inline]
    pub fn split_lowest(&mut self, g: &Graph, above_anchor: u64) -> Frame {
        debug_assert!(self.ext != 0);
        let v = self.ext.trailing_zeros() as usize;
        let vbit = 1u64 << v;
        self.ext &= self.ext - 1;
        let child_set = self.set | vbit;
        let child = Frame {
            set: child_set,
            ext: (self.ext | (g.adjacency(v) & above_anchor)) & !(child_set | self.banned),
            banned: self.banned,
        };
        self.banned |= vbit;
        child
    }
}

/// Mask of the vertices strictly above `r`.
#[inline]
pub(crate) fn above(r: usize) -> u64 {
    if r >= 63 {
        0
    } else {
        !0u64 << (r + 1)
    }
}

/// Iterator over every nonempty connected vertex set of a graph,
/// each exactly once, in the deterministic anchored order.
pub struct ConnectedSets<'g> {
    g: &'g Graph,
    next_anchor: usize,
    anchor_end: usize,
    above_anchor: u64,
    stack: Vec<Frame>,
}

impl<'g> ConnectedSets<'g> {
    /// All connected sets of `g`.
    pub fn new(g: &'g Graph) -> Self {
        ConnectedSets {
            g,
            next_anchor: 0,
            anchor_end: g.order(),
            above_anchor: 0,
            stack: Vec::with_capacity(g.order()),
        }
    }

    /// Only the connected sets whose smallest vertex is `anchor`.
    pub fn anchored(g: &'g Graph, anchor: usize) -> Self {
        assert!(anchor < g.order(), "anchor out of range");
        ConnectedSets {
            g,
            next_anchor: anchor,
            anchor_end: anchor + 1,
            above_anchor: 0,
            stack: Vec::with_capacity(g.order()),
        }
    }
}

impl Iterator for ConnectedSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            match self.stack.last_mut() {
                Some(top) if top.ext != 0 => {
                    let child = top.split_lowest(self.g, self.above_anchor);
                    let set = child.set;
                    self.stack.push(child);
                    return Some(VertexSet::from_mask(set));
                }
                Some(_) => {
                    self.stack.pop();
                }
                None => {
                    if self.next_anchor >= self.anchor_end {
                        return None;
                    }
                    let r = self.next_anchor;
                    self.next_anchor += 1;
                    self.above_anchor = above(r);
                    let root = Frame::anchor_root(self.g, r);
                    let set = root.set;
                    self.stack.push(root);
                    return Some(VertexSet::from_mask(set));
                }
            }
        }
    }
}

/// Streams every nonempty connected vertex set of `g` exactly once.
///
/// See the module docs for the emission order guarantee.
pub fn enumerate_connected_sets(g: &Graph) -> ConnectedSets<'_> {
    ConnectedSets::new(g)
}
