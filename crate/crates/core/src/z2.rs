//! Dense Z₂ vectors and matrices on u64 blocks.

/// Bit vector of fixed length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    blocks: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, blocks: vec![0; len.div_ceil(64)] }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        if v {
            self.blocks[i / 64] |= 1 << (i % 64);
        } else {
            self.blocks[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    pub fn and_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Support containment: is `self`'s support a subset of `other`'s?
    pub fn subset_of(&self, other: &BitVec) -> bool {
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::zeros(len);
        for i in idx {
            v.set(i, true);
        }
        v
    }
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// Row-major Z₂ matrix.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    pub rows: Vec<BitVec>,
    pub cols: usize,
}

impl BitMatrix {
    pub fn new(cols: usize) -> Self {
        BitMatrix { rows: vec![], cols }
    }

    pub fn push_row(&mut self, row: BitVec) {
        debug_assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    pub fn rank(&self) -> usize {
        let mut work: Vec<BitVec> = self.rows.clone();
        gauss(&mut work, self.cols).len()
    }

    /// Basis of `{x : M x = 0}`, canonical per column order.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let mut work = self.rows.clone();
        let pivots = gauss(&mut work, self.cols);
        let mut piv_of_col = vec![usize::MAX; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            piv_of_col[c] = r;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if piv_of_col[free] != usize::MAX {
                continue;
            }
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (r, &pc) in pivots.iter().enumerate() {
                if work[r].get(free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// In-place row reduction; returns pivot columns, truncates zero rows.
fn gauss(rows: &mut Vec<BitVec>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_members_nullify() {
        // boundary-like matrix: rows = triples over 4 columns
        let mut m = BitMatrix::new(4);
        m.push_row(BitVec::from_indices(4, [0, 1, 2]));
        m.push_row(BitVec::from_indices(4, [1, 2, 3]));
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m.rows {
                let parity = row.ones().filter(|&i| v.get(i)).count() % 2;
                assert_eq!(parity, 0);
            }
        }
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn subset_test() {
        let a = BitVec::from_indices(5, [1, 3]);
        let b = BitVec::from_indices(5, [0, 1, 3]);
        assert!(a.subset_of(&b));
        assert!(!b.subset_of(&a));
    }
}
