/// Strictly increasing axis indices labelling a wedge basis element
/// `dx_{i1} ∧ ... ∧ dx_{ik}` (or the dual `∂_{i1} ∧ ... ∧ ∂_{ik}`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndexTuple {
    indices: Vec<usize>,
}

impl IndexTuple {
    /// The empty tuple labelling the scalar (degree 0) basis element.
    pub fn empty() -> Self {
        IndexTuple { indices: Vec::new() }
    }

    /// Build from strictly increasing indices; `None` otherwise.
    pub fn new(indices: Vec<usize>) -> Option<Self> {
        if indices.windows(2).all(|w| w[0] < w[1]) {
            Some(IndexTuple { indices })
        } else {
            None
        }
    }

    /// Sort an arbitrary index list into a tuple, returning the sign of the
    /// sorting permutation; `None` when an index repeats (the basis element
    /// is zero).
    pub fn from_unsorted(indices: &[usize]) -> Option<(i8, Self)> {
        let mut sorted: Vec<usize> = Vec::with_capacity(indices.len());
        let mut sign = 1i8;
        for &idx in indices {
            // insertion sort, counting transpositions
            let pos = sorted.partition_point(|&a| a < idx);
            if sorted.get(pos) == Some(&idx) {
                return None;
            }
            if (sorted.len() - pos) % 2 == 1 {
                sign = -sign;
            }
            sorted.insert(pos, idx);
        }
        Some((sign, IndexTuple { indices: sorted }))
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, axis: usize) -> bool {
        self.indices.binary_search(&axis).is_ok()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.indices.last().copied()
    }

    /// Concatenate two disjoint tuples, returning the permutation sign that
    /// sorts the concatenation; `None` when they share an index.
    pub fn merge(&self, other: &IndexTuple) -> Option<(i8, IndexTuple)> {
        let mut merged = Vec::with_capacity(self.len() + other.len());
        let mut sign = 1i8;
        let mut a = self.indices.iter().peekable();
        let mut b = other.indices.iter().peekable();
        let mut remaining_a = self.len();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&ia), Some(&&ib)) => {
                    if ia == ib {
                        return None;
                    }
                    if ia < ib {
                        merged.push(ia);
                        a.next();
                        remaining_a -= 1;
                    } else {
                        // ib jumps over every index still waiting in `a`
                        if remaining_a % 2 == 1 {
                            sign = -sign;
                        }
                        merged.push(ib);
                        b.next();
                    }
                }
                (Some(&&ia), None) => {
                    merged.push(ia);
                    a.next();
                }
                (None, Some(&&ib)) => {
                    merged.push(ib);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Some((sign, IndexTuple { indices: merged }))
    }

    /// Insert one axis, as in `dx_axis ∧ dx_I`; sign is `(-1)^p` with `p`
    /// the number of indices smaller than `axis`.
    pub fn insert_axis(&self, axis: usize) -> Option<(i8, IndexTuple)> {
        if self.contains(axis) {
            return None;
        }
        let pos = self.indices.partition_point(|&a| a < axis);
        let mut indices = self.indices.clone();
        indices.insert(pos, axis);
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        Some((sign, IndexTuple { indices }))
    }

    /// Remove one axis, as in the single-vector interior product; sign is
    /// `(-1)^p` with `p` the position of `axis` in the tuple.
    pub fn remove_axis(&self, axis: usize) -> Option<(i8, IndexTuple)> {
        let pos = self.indices.binary_search(&axis).ok()?;
        let mut indices = self.indices.clone();
        indices.remove(pos);
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        Some((sign, IndexTuple { indices }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tup(v: &[usize]) -> IndexTuple {
        IndexTuple::new(v.to_vec()).unwrap()
    }

    #[test]
    fn merge_counts_inversions() {
        // dy ∧ dx = -dx ∧ dy
        assert_eq!(tup(&[1]).merge(&tup(&[0])), Some((-1, tup(&[0, 1]))));
        // dx ∧ dy keeps its sign
        assert_eq!(tup(&[0]).merge(&tup(&[1])), Some((1, tup(&[0, 1]))));
        // repeated index vanishes
        assert_eq!(tup(&[0, 1]).merge(&tup(&[1])), None);
        // (dz ∧ dx-style) two-step: {2} then {0,1}: dz∧dx∧dy = +dx∧dy∧dz
        assert_eq!(tup(&[2]).merge(&tup(&[0, 1])), Some((1, tup(&[0, 1, 2]))));
    }

    #[test]
    fn from_unsorted_signs() {
        assert_eq!(IndexTuple::from_unsorted(&[2, 0]), Some((-1, tup(&[0, 2]))));
        assert_eq!(IndexTuple::from_unsorted(&[2, 0, 1]), Some((1, tup(&[0, 1, 2]))));
        assert_eq!(IndexTuple::from_unsorted(&[1, 1]), None);
    }

    #[test]
    fn insert_and_remove_are_inverse_up_to_sign() {
        let base = tup(&[0, 2]);
        let (s1, with) = base.insert_axis(1).unwrap();
        assert_eq!(s1, -1);
        let (s2, without) = with.remove_axis(1).unwrap();
        assert_eq!(s2, -1);
        assert_eq!(without, base);
        assert_eq!(base.insert_axis(2), None);
    }
}
