// Copyright 2026 The ifpmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The inverse FP-tree and its projected/residual decomposition.
//!
//! Transactions are inserted with their items sorted by ascending support,
//! so the least frequent item of a tree sits at exactly one node, directly
//! below the root. That is what makes both decompositions local: the
//! projected tree of the lf-item is the subtree under its node, and the
//! residual tree is the rest of the tree with that subtree spliced back in.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::data::{order_by_support, ItemId, Itemset, TransactionDatabase};
use crate::error::{Error, Result};

const ROOT: usize = 0;

#[derive(Debug, Clone)]
struct Node {
    item: Option<ItemId>,
    /// Position of `item` in the tree order; only relative values matter.
    rank: u32,
    /// Zero marks a node that was merged away.
    count: u64,
    parent: usize,
    /// Sorted by rank.
    children: Vec<usize>,
    /// Next and previous nodes carrying the same item.
    link: Option<usize>,
    prev_link: Option<usize>,
}

#[derive(Debug, Clone, Copy)]
struct HeaderEntry {
    head: usize,
    tail: usize,
    support: u64,
}

/// A weighted transaction: items in tree order and a multiplicity.
pub type WeightedPath = (Vec<ItemId>, u64);

#[derive(Debug, Clone)]
pub struct IfpTree {
    nodes: Vec<Node>,
    live: usize,
    header: BTreeMap<ItemId, HeaderEntry>,
    order: Vec<ItemId>,
    rank: HashMap<ItemId, u32>,
    num_transactions: u64,
}

impl IfpTree {
    fn with_order(order: Vec<ItemId>, num_transactions: u64) -> Self {
        let rank = order
            .iter()
            .enumerate()
            .map(|(r, &i)| (i, r as u32))
            .collect();
        IfpTree {
            nodes: vec![Node {
                item: None,
                rank: 0,
                count: num_transactions,
                parent: ROOT,
                children: Vec::new(),
                link: None,
                prev_link: None,
            }],
            live: 0,
            header: BTreeMap::new(),
            order,
            rank,
            num_transactions,
        }
    }

    pub fn build(db: &TransactionDatabase) -> Self {
        let rows = db
            .transactions()
            .iter()
            .map(|t| (t.items.items().to_vec(), 1));
        Self::from_weighted(rows, db.len() as u64)
    }

    /// Builds a tree from weighted transactions. Items in each row may come
    /// in any order; `num_transactions` also counts rows with no items.
    pub fn from_weighted<I>(rows: I, num_transactions: u64) -> Self
    where
        I: IntoIterator<Item = WeightedPath>,
    {
        let rows: Vec<WeightedPath> = rows.into_iter().filter(|(_, w)| *w > 0).collect();
        let mut supports: BTreeMap<ItemId, u64> = BTreeMap::new();
        for (items, w) in &rows {
            for &item in items {
                *supports.entry(item).or_insert(0) += w;
            }
        }
        let mut tree = Self::with_order(order_by_support(&supports), num_transactions);
        for (mut items, w) in rows {
            items.sort_unstable_by_key(|i| tree.rank[i]);
            items.dedup();
            tree.insert(&items, w);
        }
        tree
    }

    /// Inserts a path already sorted in tree order.
    fn insert(&mut self, items: &[ItemId], weight: u64) {
        let mut at = ROOT;
        for &item in items {
            at = self.child_or_insert(at, item);
            self.nodes[at].count += weight;
            self.header.get_mut(&item).unwrap().support += weight;
        }
    }

    fn find_child(&self, parent: usize, rank: u32) -> std::result::Result<usize, usize> {
        self.nodes[parent]
            .children
            .binary_search_by_key(&rank, |&c| self.nodes[c].rank)
    }

    /// Returns the child of `parent` labelled `item`, creating it with a zero
    /// count and appending it to the header chain if it does not exist.
    fn child_or_insert(&mut self, parent: usize, item: ItemId) -> usize {
        let rank = self.rank[&item];
        match self.find_child(parent, rank) {
            Ok(pos) => self.nodes[parent].children[pos],
            Err(pos) => {
                let id = self.nodes.len();
                let prev = self.header.get(&item).map(|e| e.tail);
                self.nodes.push(Node {
                    item: Some(item),
                    rank,
                    count: 0,
                    parent,
                    children: Vec::new(),
                    link: None,
                    prev_link: prev,
                });
                self.live += 1;
                self.nodes[parent].children.insert(pos, id);
                match self.header.get_mut(&item) {
                    Some(entry) => {
                        self.nodes[entry.tail].link = Some(id);
                        entry.tail = id;
                    }
                    None => {
                        self.header.insert(
                            item,
                            HeaderEntry {
                                head: id,
                                tail: id,
                                support: 0,
                            },
                        );
                    }
                }
                id
            }
        }
    }

    /// Copies the subtree of `src` at `src_node` below `dst_parent`, merging
    /// with existing same-item children by summing counts. Nodes whose item
    /// is in `drop` are skipped and their children attached to the parent.
    /// The relative order of copied items must agree between both trees.
    fn copy_from(
        &mut self,
        dst_parent: usize,
        src: &IfpTree,
        src_node: usize,
        drop: &BTreeSet<ItemId>,
    ) {
        let node = &src.nodes[src_node];
        let item = node.item.expect("root is never copied");
        let target = if drop.contains(&item) {
            dst_parent
        } else {
            let id = self.child_or_insert(dst_parent, item);
            self.nodes[id].count += node.count;
            self.header.get_mut(&item).unwrap().support += node.count;
            id
        };
        for &child in &node.children {
            self.copy_from(target, src, child, drop);
        }
    }

    /// Removes a node from its item's header chain and marks it dead.
    fn kill(&mut self, node: usize) {
        let item = self.nodes[node].item.unwrap();
        let (prev, next) = (self.nodes[node].prev_link, self.nodes[node].link);
        match prev {
            Some(p) => self.nodes[p].link = next,
            None => {
                if let Some(n) = next {
                    self.header.get_mut(&item).unwrap().head = n;
                }
            }
        }
        match next {
            Some(n) => self.nodes[n].prev_link = prev,
            None => {
                if let Some(p) = prev {
                    self.header.get_mut(&item).unwrap().tail = p;
                }
            }
        }
        if prev.is_none() && next.is_none() {
            self.header.remove(&item);
        }
        let n = &mut self.nodes[node];
        n.count = 0;
        n.children.clear();
        n.link = None;
        n.prev_link = None;
        self.live -= 1;
    }

    /// Moves the subtree at `node` under `parent`, merging it into an
    /// existing child with the same item if there is one.
    fn merge_into(&mut self, parent: usize, node: usize) {
        let rank = self.nodes[node].rank;
        match self.find_child(parent, rank) {
            Err(pos) => {
                self.nodes[node].parent = parent;
                self.nodes[parent].children.insert(pos, node);
            }
            Ok(pos) => {
                let existing = self.nodes[parent].children[pos];
                self.nodes[existing].count += self.nodes[node].count;
                let children = std::mem::take(&mut self.nodes[node].children);
                self.kill(node);
                for child in children {
                    self.merge_into(existing, child);
                }
            }
        }
    }

    /// Deletes `item` from every transaction in place: each of its nodes is
    /// unhooked and its children are merged into the node's parent.
    fn remove_item(&mut self, item: ItemId) {
        let Some(entry) = self.header.get(&item).copied() else {
            self.order.retain(|&i| i != item);
            return;
        };
        let mut at = Some(entry.head);
        while let Some(node) = at {
            at = self.nodes[node].link;
            let parent = self.nodes[node].parent;
            let pos = self.find_child(parent, self.nodes[node].rank).unwrap();
            self.nodes[parent].children.remove(pos);
            let children = std::mem::take(&mut self.nodes[node].children);
            for child in children {
                self.merge_into(parent, child);
            }
            self.nodes[node].count = 0;
            self.live -= 1;
        }
        self.header.remove(&item);
        self.order.retain(|&i| i != item);
    }

    /// Copy of this tree with the given items deleted from every transaction.
    ///
    /// Deleting items leaves the supports of all other items unchanged, so
    /// the remaining order stays valid and nodes are spliced, not reinserted.
    pub fn without_items(&self, drop: &BTreeSet<ItemId>) -> IfpTree {
        let mut out = self.clone();
        out.remove_items(drop);
        out
    }

    /// In-place form of [`IfpTree::without_items`].
    pub fn remove_items(&mut self, drop: &BTreeSet<ItemId>) {
        for &item in drop {
            self.remove_item(item);
        }
    }

    pub fn num_transactions(&self) -> u64 {
        self.num_transactions
    }

    /// Number of item nodes (the root is not counted).
    pub fn node_count(&self) -> usize {
        self.live
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    /// The tree's item order: ascending support, ties by ascending id.
    pub fn order(&self) -> &[ItemId] {
        &self.order
    }

    pub fn item_support(&self, item: ItemId) -> u64 {
        self.header.get(&item).map_or(0, |e| e.support)
    }

    /// Per-item support of the represented database.
    pub fn item_supports(&self) -> BTreeMap<ItemId, u64> {
        self.header.iter().map(|(&i, e)| (i, e.support)).collect()
    }

    /// Items with at least one node.
    pub fn items(&self) -> BTreeSet<ItemId> {
        self.header.keys().copied().collect()
    }

    pub fn lf_item(&self) -> Result<ItemId> {
        self.order.first().copied().ok_or(Error::NoLfItem)
    }

    fn lf_node(&self, x: ItemId) -> Result<usize> {
        if self.lf_item()? != x {
            return Err(Error::NotLfItem(x.0));
        }
        let node = self.header[&x].head;
        debug_assert_eq!(self.nodes[node].parent, ROOT);
        debug_assert!(self.nodes[node].link.is_none());
        Ok(node)
    }

    /// Tree of the transactions containing the lf-item `x`, with `x` removed.
    pub fn projected_tree(&self, x: ItemId) -> Result<IfpTree> {
        Ok(self.projected_tree_min_support(x, 0)?.0)
    }

    /// Projected tree of the lf-item `x` with every item whose support in
    /// the projection is below `min_support` left out. The left-out items
    /// are returned with their projected supports.
    pub fn projected_tree_min_support(
        &self,
        x: ItemId,
        min_support: u64,
    ) -> Result<(IfpTree, Vec<(ItemId, u64)>)> {
        let node = self.lf_node(x)?;
        let count = self.nodes[node].count;

        let mut supports: BTreeMap<ItemId, u64> = BTreeMap::new();
        let mut stack = self.nodes[node].children.clone();
        while let Some(n) = stack.pop() {
            *supports.entry(self.nodes[n].item.unwrap()).or_insert(0) += self.nodes[n].count;
            stack.extend_from_slice(&self.nodes[n].children);
        }
        let dropped: Vec<(ItemId, u64)> = supports
            .iter()
            .filter(|&(_, &s)| s < min_support)
            .map(|(&i, &s)| (i, s))
            .collect();
        let drop: BTreeSet<ItemId> = dropped.iter().map(|&(i, _)| i).collect();
        supports.retain(|i, _| !drop.contains(i));

        let order = order_by_support(&supports);
        let keeps_order = order
            .windows(2)
            .all(|w| self.rank[&w[0]] < self.rank[&w[1]]);

        let tree = if keeps_order {
            let mut out = Self::with_order(order, count);
            for &child in &self.nodes[node].children {
                out.copy_from(ROOT, self, child, &drop);
            }
            out
        } else {
            let paths = self.paths_below(node).into_iter().map(|(mut p, w)| {
                p.retain(|i| !drop.contains(i));
                (p, w)
            });
            Self::from_weighted(paths, count)
        };
        Ok((tree, dropped))
    }

    /// Tree of all transactions with the lf-item `x` deleted.
    pub fn residual_tree(&self, x: ItemId) -> Result<IfpTree> {
        self.lf_node(x)?;
        self.clone().into_residual_tree(x)
    }

    /// Turns this tree into the residual tree of its lf-item `x` by deleting
    /// the single `x` node and merging its subtree into the root. Costs time
    /// proportional to the subtree of `x`, not to the whole tree.
    pub fn into_residual_tree(mut self, x: ItemId) -> Result<IfpTree> {
        self.lf_node(x)?;
        self.remove_item(x);
        Ok(self)
    }

    /// Weighted root-to-node paths for transactions ending at each node.
    /// Empty transactions are not listed.
    pub fn paths(&self) -> Vec<WeightedPath> {
        self.paths_below(ROOT)
    }

    fn paths_below(&self, start: usize) -> Vec<WeightedPath> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        for &child in &self.nodes[start].children {
            self.collect_paths(child, &mut path, &mut out);
        }
        out
    }

    fn collect_paths(&self, node: usize, path: &mut Vec<ItemId>, out: &mut Vec<WeightedPath>) {
        let n = &self.nodes[node];
        path.push(n.item.unwrap());
        let below: u64 = n.children.iter().map(|&c| self.nodes[c].count).sum();
        if n.count > below {
            out.push((path.clone(), n.count - below));
        }
        for &child in &n.children {
            self.collect_paths(child, path, out);
        }
        path.pop();
    }

    /// Support of `set` in the represented database.
    pub fn tree_support(&self, set: &Itemset) -> u64 {
        if set.is_empty() {
            return self.num_transactions;
        }
        if set.items().iter().any(|i| !self.header.contains_key(i)) {
            return 0;
        }
        let deepest = *set.items().iter().max_by_key(|i| self.rank[i]).unwrap();
        let mut total = 0;
        let mut at = Some(self.header[&deepest].head);
        while let Some(node) = at {
            let mut missing = set.len() - 1;
            let mut up = self.nodes[node].parent;
            while up != ROOT && missing > 0 {
                if set.contains(self.nodes[up].item.unwrap()) {
                    missing -= 1;
                }
                up = self.nodes[up].parent;
            }
            if missing == 0 {
                total += self.nodes[node].count;
            }
            at = self.nodes[node].link;
        }
        total
    }

    /// Vertical index over this tree's weighted paths, for counting many
    /// supports at once.
    pub fn support_index(&self) -> PathSupportIndex {
        let paths = self.paths();
        let mut sets: HashMap<ItemId, FixedBitSet> = HashMap::new();
        for (row, (items, _)) in paths.iter().enumerate() {
            for &item in items {
                sets.entry(item)
                    .or_insert_with(|| FixedBitSet::with_capacity(paths.len()))
                    .insert(row);
            }
        }
        PathSupportIndex {
            weights: paths.iter().map(|(_, w)| *w).collect(),
            sets,
            num_transactions: self.num_transactions,
        }
    }

    /// Counts of the nodes carrying `item`, in header-chain order.
    pub fn header_chain(&self, item: ItemId) -> Vec<u64> {
        let mut counts = Vec::new();
        let mut at = self.header.get(&item).map(|e| e.head);
        while let Some(node) = at {
            counts.push(self.nodes[node].count);
            at = self.nodes[node].link;
        }
        counts
    }

    /// Indented `item:count` rendering, children in tree order.
    pub fn dump_with<F: Fn(ItemId) -> String>(&self, label: F) -> String {
        let mut out = String::new();
        let mut stack: Vec<(usize, usize)> = self.nodes[ROOT]
            .children
            .iter()
            .rev()
            .map(|&c| (c, 0))
            .collect();
        while let Some((node, depth)) = stack.pop() {
            let n = &self.nodes[node];
            let _ = writeln!(
                out,
                "{:indent$}{}:{}",
                "",
                label(n.item.unwrap()),
                n.count,
                indent = depth * 2
            );
            stack.extend(n.children.iter().rev().map(|&c| (c, depth + 1)));
        }
        out
    }

    pub fn dump(&self) -> String {
        self.dump_with(|i| i.to_string())
    }

    /// Checks the structural invariants, returning a description of the
    /// first violation.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let mut seen: HashMap<ItemId, (usize, u64)> = HashMap::new();
        let mut reachable = 0;
        let mut stack = vec![ROOT];
        while let Some(id) = stack.pop() {
            let n = &self.nodes[id];
            stack.extend_from_slice(&n.children);
            for &c in &n.children {
                if self.nodes[c].parent != id {
                    return Err(format!("node {c} has a stale parent"));
                }
            }
            let ranks: Vec<u32> = n.children.iter().map(|&c| self.nodes[c].rank).collect();
            if ranks.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("children of node {id} not strictly ordered"));
            }
            if id == ROOT {
                continue;
            }
            reachable += 1;
            let item = n.item.ok_or(format!("node {id} has no item"))?;
            if n.rank != self.rank[&item] {
                return Err(format!("node {id} has a stale rank"));
            }
            let children_sum: u64 = n.children.iter().map(|&c| self.nodes[c].count).sum();
            if children_sum > n.count {
                return Err(format!(
                    "node {id} count {} < children {children_sum}",
                    n.count
                ));
            }
            if n.count == 0 {
                return Err(format!("node {id} has zero count"));
            }
            if n.parent != ROOT && self.nodes[n.parent].rank >= n.rank {
                return Err(format!("node {id} breaks the item order"));
            }
            let e = seen.entry(item).or_insert((0, 0));
            e.0 += 1;
            e.1 += n.count;
        }
        if reachable != self.live {
            return Err(format!(
                "{reachable} reachable nodes but {} live",
                self.live
            ));
        }
        for (&item, entry) in &self.header {
            let chain = self.header_chain(item);
            let (nodes, total) = seen.get(&item).copied().unwrap_or((0, 0));
            if chain.len() != nodes || chain.iter().sum::<u64>() != total || total != entry.support
            {
                return Err(format!("header chain of item {item} is inconsistent"));
            }
        }
        if seen.len() != self.header.len() || self.order.len() != self.header.len() {
            return Err("order, header and nodes disagree on the item set".into());
        }
        let supports = self.item_supports();
        if order_by_support(&supports) != self.order {
            return Err("order is not ascending by support".into());
        }
        let root_sum: u64 = self.nodes[ROOT]
            .children
            .iter()
            .map(|&c| self.nodes[c].count)
            .sum();
        if root_sum > self.num_transactions {
            return Err("more paths than transactions".into());
        }
        Ok(())
    }
}

/// Item-to-path bitsets with per-path multiplicities.
#[derive(Debug, Clone)]
pub struct PathSupportIndex {
    weights: Vec<u64>,
    sets: HashMap<ItemId, FixedBitSet>,
    num_transactions: u64,
}

impl PathSupportIndex {
    pub fn support(&self, set: &Itemset) -> u64 {
        let mut items = set.items().iter();
        let Some(first) = items.next() else {
            return self.num_transactions;
        };
        let Some(first) = self.sets.get(first) else {
            return 0;
        };
        let mut acc = first.clone();
        for item in items {
            match self.sets.get(item) {
                Some(rows) => acc.intersect_with(rows),
                None => return 0,
            }
        }
        acc.ones().map(|row| self.weights[row]).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::prune_infrequent_items;
    use crate::fixtures::table1;

    fn label_of(db: &TransactionDatabase) -> impl Fn(ItemId) -> String + '_ {
        move |i| db.label(i)
    }

    fn pruned_table1() -> (TransactionDatabase, IfpTree) {
        let (db, _) = prune_infrequent_items(&table1(), 2);
        let tree = IfpTree::build(&db);
        (db, tree)
    }

    fn item(db: &TransactionDatabase, l: &str) -> ItemId {
        db.item_by_label(l).unwrap()
    }

    #[test]
    fn tree_without_first_transaction() {
        // Transactions T2..T9: E has support 3 and every other item 4, so E
        // leads the order.
        let full = table1();
        let db = full.filter_transactions(|t| t.tid >= 1);
        let tree = IfpTree::build(&db);
        tree.validate().unwrap();
        assert_eq!(
            tree.dump_with(label_of(&db)),
            "E:3\n  B:1\n  C:1\n  D:1\nA:4\n  B:2\n    C:1\n  C:1\n    D:1\n  D:1\nB:1\n  C:1\n    D:1\n"
        );
    }

    #[test]
    fn table1_tree_after_pruning() {
        let (db, tree) = pruned_table1();
        tree.validate().unwrap();
        assert_eq!(tree.num_transactions(), 9);
        assert_eq!(
            tree.dump_with(label_of(&db)),
            "A:4\n  B:2\n    C:1\n  C:1\n    D:1\n  D:1\nB:2\n  C:1\n    D:1\n  E:1\nC:1\n  E:1\nD:1\n  E:1\nE:1\n"
        );
    }

    #[test]
    fn identical_transactions_share_a_path() {
        let db = TransactionDatabase::from_rows([vec![0, 1], vec![0, 1]]);
        let tree = IfpTree::build(&db);
        assert_eq!(tree.dump(), "0:2\n  1:2\n");
    }

    #[test]
    fn disjoint_transactions() {
        let db = TransactionDatabase::from_rows([vec![0], vec![1]]);
        let tree = IfpTree::build(&db);
        assert_eq!(tree.dump(), "0:1\n1:1\n");
    }

    #[test]
    fn empty_transactions_are_counted() {
        let db = TransactionDatabase::from_rows([vec![], vec![3], vec![]]);
        let tree = IfpTree::build(&db);
        assert_eq!(tree.num_transactions(), 3);
        assert_eq!(tree.node_count(), 1);
    }

    #[test]
    fn lf_items() {
        let (db, tree) = pruned_table1();
        assert_eq!(tree.lf_item().unwrap(), item(&db, "A"));
        // Every item of the residual tree has support 4; ascending id picks B.
        let residual = tree.residual_tree(item(&db, "A")).unwrap();
        assert_eq!(residual.lf_item().unwrap(), item(&db, "B"));

        let single = IfpTree::build(&TransactionDatabase::from_rows([vec![9]]));
        assert_eq!(single.lf_item().unwrap(), ItemId(9));

        let empty = IfpTree::build(&TransactionDatabase::default());
        assert_eq!(empty.lf_item(), Err(Error::NoLfItem));
    }

    #[test]
    fn residual_lf_item_without_t1_is_e() {
        // The residual of A over T2..T9 has E at support 3 below B, C, D.
        let full = table1();
        let a = item(&full, "A");
        let db = full.filter_transactions(|t| t.tid >= 1);
        let rows = db.transactions().iter().map(|t| {
            t.items
                .without(a)
                .items()
                .iter()
                .map(|i| i.0)
                .collect::<Vec<_>>()
        });
        let residual_db = TransactionDatabase::from_rows(rows);
        let tree = IfpTree::build(&residual_db);
        assert_eq!(tree.lf_item().unwrap(), item(&full, "E"));
        let projected = tree.projected_tree(item(&full, "E")).unwrap();
        assert_eq!(projected.num_transactions(), 3);
        for l in ["B", "C", "D"] {
            assert_eq!(projected.item_support(item(&full, l)), 1);
        }
    }

    #[test]
    fn projected_tree_of_a() {
        let (db, tree) = pruned_table1();
        let p = tree.projected_tree(item(&db, "A")).unwrap();
        p.validate().unwrap();
        assert_eq!(p.num_transactions(), 4);
        for l in ["B", "C", "D"] {
            assert_eq!(p.item_support(item(&db, l)), 2);
        }
        assert_eq!(p.dump_with(label_of(&db)), "B:2\n  C:1\nC:1\n  D:1\nD:1\n");
        let items: Vec<String> = p.items().into_iter().map(|i| db.label(i)).collect();
        assert_eq!(items, ["B", "C", "D"]);
    }

    #[test]
    fn residual_tree_of_a() {
        let (db, tree) = pruned_table1();
        let r = tree.residual_tree(item(&db, "A")).unwrap();
        r.validate().unwrap();
        assert_eq!(r.num_transactions(), 9);
        assert_eq!(
            r.dump_with(label_of(&db)),
            "B:4\n  C:2\n    D:1\n  E:1\nC:2\n  D:1\n  E:1\nD:2\n  E:1\nE:1\n"
        );
        let items: Vec<String> = r.items().into_iter().map(|i| db.label(i)).collect();
        assert_eq!(items, ["B", "C", "D", "E"]);
    }

    #[test]
    fn decomposition_requires_lf_item() {
        let (db, tree) = pruned_table1();
        let b = item(&db, "B");
        assert_eq!(tree.projected_tree(b).unwrap_err(), Error::NotLfItem(b.0));
        assert_eq!(tree.residual_tree(b).unwrap_err(), Error::NotLfItem(b.0));
    }

    #[test]
    fn projection_of_item_always_alone() {
        let db = TransactionDatabase::from_rows([vec![0], vec![0], vec![1], vec![1], vec![1]]);
        let tree = IfpTree::build(&db);
        let p = tree.projected_tree(ItemId(0)).unwrap();
        assert!(p.is_empty());
        assert_eq!(p.num_transactions(), 2);
    }

    #[test]
    fn projection_reorders_items() {
        // Globally 1 is rarer than 2, but among transactions with 0 it is not.
        let db = TransactionDatabase::from_rows([
            vec![0, 1, 2],
            vec![0, 1],
            vec![2],
            vec![2],
            vec![2],
            vec![1],
        ]);
        let tree = IfpTree::build(&db);
        assert_eq!(tree.order(), &[ItemId(0), ItemId(1), ItemId(2)]);
        let p = tree.projected_tree(ItemId(0)).unwrap();
        p.validate().unwrap();
        assert_eq!(p.order(), &[ItemId(2), ItemId(1)]);
        assert_eq!(p.dump(), "2:1\n  1:1\n1:1\n");
    }

    #[test]
    fn tree_support_examples() {
        let tree = IfpTree::build(&table1());
        let db = table1();
        let bd = Itemset::new([item(&db, "B"), item(&db, "D")]);
        assert_eq!(tree.tree_support(&bd), 1);
        assert_eq!(tree.tree_support(&Itemset::empty()), 9);
        assert_eq!(tree.tree_support(&Itemset::from_ids([42])), 0);
    }

    #[test]
    fn empty_tree_items() {
        let tree = IfpTree::build(&TransactionDatabase::default());
        assert!(tree.items().is_empty());
        assert!(tree.is_empty());
    }
}
