//! Set-partition enumeration via restricted growth strings.
//!
//! A restricted growth string over n elements is a sequence `a[0..n]`
//! with `a[0] = 0` and `a[i] <= max(a[0..i]) + 1`; each string encodes
//! one set partition (`a[i]` is the block index of element i).
//! Lexicographic order over the strings gives a canonical,
//! duplicate-free enumeration with Bell(n) entries.

use crate::rough::Partition;
use crate::sets::Universe;

/// All partitions of `universe` in restricted-growth-string order.
///
/// The first partition is the single-block one, the last puts every
/// element in its own block. Blocks are ordered by smallest element.
pub fn partitions_of(universe: &Universe) -> PartitionIter {
    PartitionIter {
        universe: universe.clone(),
        rgs: vec![0; universe.size()],
        done: false,
    }
}

/// Iterator over all set partitions of a universe.
pub struct PartitionIter {
    universe: Universe,
    rgs: Vec<usize>,
    done: bool,
}

impl PartitionIter {
    fn current(&self) -> Partition {
        let block_count = self.rgs.iter().max().copied().unwrap_or(0) + 1;
        let mut masks = vec![0u64; block_count];
        for (element, &block) in self.rgs.iter().enumerate() {
            masks[block] |= 1 << element;
        }
        let blocks = masks.into_iter().map(|m| self.universe.subset(m)).collect();
        Partition::new(&self.universe, blocks).expect("growth string encodes a valid partition")
    }

    /// Advances `rgs` to the lexicographic successor; false when exhausted.
    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            let prefix_max = self.rgs[..i].iter().max().copied().unwrap_or(0);
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                for j in i + 1..n {
                    self.rgs[j] = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let partition = self.current();
        if !self.advance() {
            self.done = true;
        }
        Some(partition)
    }
}
