use crate::presentation::Presentation;

/// Dimension over the field with two elements of the abelianization: the
/// number of generators minus the rank of the relator parity vectors.
pub fn abelianization_f2(p: &Presentation) -> usize {
    let n = p.generators();
    let words = n.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = p
        .words()
        .map(|w| {
            let mut v = vec![0u64; words];
            for &x in w.letters() {
                v[x / 64] ^= 1 << (x % 64);
            }
            v
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let (wi, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][wi] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[wi] & bit != 0 {
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    n - rank
}
