//! Small exact integer linear algebra: determinants, adjugates, and
//! reduction modulo a sublattice in Hermite normal form.

/// Determinant by fraction-free Bareiss elimination.
pub fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    i64::try_from(sign * a[n - 1][n - 1]).expect("determinant overflow")
}

fn minor(m: &[Vec<i64>], row: usize, col: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Adjugate matrix, so that `m * adj(m) = det(m) * I`.
pub fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0i64; n]; n];
    for (i, row) in adj.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let c = det(&minor(m, j, i));
            *entry = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    adj
}

/// Row-vector times matrix.
pub fn vec_mat(v: &[i64], m: &[Vec<i64>]) -> Vec<i64> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![0i64; cols];
    for (x, row) in v.iter().zip(m) {
        if *x == 0 {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            *o = o.checked_add(x.checked_mul(*y).expect("overflow")).expect("overflow");
        }
    }
    out
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter().map(|r| vec_mat(r, b)).collect()
}

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Returns the nonzero rows in echelon form with positive pivots and
/// entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_rows(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..ncols {
        loop {
            let nz: Vec<usize> = (0..a.len()).filter(|&i| a[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][col].abs()).unwrap();
            for &i in &nz {
                if i != p {
                    let q = a[i][col].div_euclid(a[p][col]);
                    let prow = a[p].clone();
                    for (x, y) in a[i].iter_mut().zip(&prow) {
                        *x -= q * y;
                    }
                }
            }
        }
        if let Some(i) = (0..a.len()).find(|&i| a[i][col] != 0) {
            let mut row = a.remove(i);
            if row[col] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(row);
            pivots.push(col);
        }
    }
    for k in 0..out.len() {
        let pc = pivots[k];
        for i in 0..k {
            let q = out[i][pc].div_euclid(out[k][pc]);
            if q != 0 {
                let prow = out[k].clone();
                for (x, y) in out[i].iter_mut().zip(&prow) {
                    *x -= q * y;
                }
            }
        }
    }
    out
}

/// Canonical representative of `v` modulo the lattice whose Hermite form is `h`.
pub fn reduce_mod(v: &[i64], h: &[Vec<i64>]) -> Vec<i64> {
    let mut v = v.to_vec();
    for row in h {
        let pc = row.iter().position(|&x| x != 0).unwrap();
        let q = v[pc].div_euclid(row[pc]);
        for (x, y) in v.iter_mut().zip(row) {
            *x -= q * y;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_adjugate() {
        let a = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(det(&a), 4);
        let adj = adjugate(&a);
        let p = mat_mul(&a, &adj);
        for (i, row) in p.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, if i == j { 4 } else { 0 });
            }
        }
        assert_eq!(det(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn reduction_is_canonical() {
        let gens = vec![vec![1, -1, 0], vec![0, 1, -1]];
        let h = hermite_rows(&gens);
        assert_eq!(h.len(), 2);
        let a = reduce_mod(&[1, 0, 0], &h);
        let b = reduce_mod(&[0, 1, 0], &h);
        let c = reduce_mod(&[0, 0, 1], &h);
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_ne!(reduce_mod(&[0, 0, 0], &h), a);
        let l = hermite_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(reduce_mod(&[5, -4], &l), vec![1, 2]);
    }
}
