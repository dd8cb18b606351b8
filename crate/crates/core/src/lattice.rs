//! Integer-lattice normal forms: Hermite form for canonical sublattice
//! comparison and Smith form (with transforms) for quotient structure and
//! membership certificates. Everything is exact over i128.

pub type Mat128 = Vec<Vec<i128>>;

pub fn eye(n: usize) -> Mat128 {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &Mat128, b: &Mat128) -> Mat128 {
    let (ra, ca) = (a.len(), a[0].len());
    let cb = b[0].len();
    assert_eq!(ca, b.len());
    let mut out = vec![vec![0i128; cb]; ra];
    for i in 0..ra {
        for k in 0..ca {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..cb {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &Mat128, v: &[i128]) -> Vec<i128> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(&x, &y)| x * y).sum())
        .collect()
}

pub fn transpose(m: &Mat128) -> Mat128 {
    if m.is_empty() {
        return Vec::new();
    }
    let (r, c) = (m.len(), m[0].len());
    (0..c).map(|j| (0..r).map(|i| m[i][j]).collect()).collect()
}

/// Canonical row-style Hermite normal form of the lattice spanned by the rows.
///
/// Pivots are positive, entries above each pivot are reduced into `[0, pivot)`,
/// and zero rows are dropped, so two row sets span the same lattice iff their
/// normal forms are equal.
pub fn row_hnf(mut m: Mat128) -> Mat128 {
    m.retain(|r| r.iter().any(|&x| x != 0));
    if m.is_empty() {
        return m;
    }
    let ncols = m[0].len();
    let nrows = m.len();
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == nrows {
            break;
        }
        // Euclid on the entries of this column at or below pivot_row.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..nrows {
                if m[r][col] != 0 && best.is_none_or(|b| m[r][col].abs() < m[b][col].abs()) {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            m.swap(pivot_row, b);
            let p = m[pivot_row][col];
            let mut clean = true;
            for r in pivot_row + 1..nrows {
                if m[r][col] != 0 {
                    let q = m[r][col] / p;
                    for c2 in 0..ncols {
                        let sub = q * m[pivot_row][c2];
                        m[r][c2] -= sub;
                    }
                    if m[r][col] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if m[pivot_row][col] == 0 {
            continue;
        }
        if m[pivot_row][col] < 0 {
            for c2 in 0..ncols {
                m[pivot_row][c2] = -m[pivot_row][c2];
            }
        }
        let p = m[pivot_row][col];
        for r in 0..pivot_row {
            let q = m[r][col].div_euclid(p);
            if q != 0 {
                for c2 in 0..ncols {
                    let sub = q * m[pivot_row][c2];
                    m[r][c2] -= sub;
                }
            }
        }
        pivot_row += 1;
    }
    m.truncate(pivot_row);
    m
}

/// Canonical basis (as rows) of the lattice spanned by the given columns.
pub fn col_hnf(cols: &[Vec<i128>]) -> Mat128 {
    row_hnf(cols.to_vec())
}

pub fn lattices_equal(a_cols: &[Vec<i128>], b_cols: &[Vec<i128>]) -> bool {
    col_hnf(a_cols) == col_hnf(b_cols)
}

/// Smith normal form `u * m * v = d` with unimodular `u`, `v`.
pub struct Snf {
    pub divisors: Vec<i128>,
    pub u: Mat128,
    pub v: Mat128,
    pub rows: usize,
    pub cols: usize,
}

pub fn snf(m: &Mat128) -> Snf {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut d = m.clone();
    let mut u = eye(rows);
    let mut v = eye(cols);
    let rank_bound = rows.min(cols);

    for t in 0..rank_bound {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if d[i][j] != 0
                        && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            d.swap(t, pi);
            u.swap(t, pi);
            for row in d.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let p = d[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                if d[i][t] != 0 {
                    let q = d[i][t] / p;
                    if q != 0 {
                        for c in 0..cols {
                            let sub = q * d[t][c];
                            d[i][c] -= sub;
                        }
                        for c in 0..rows {
                            let sub = q * u[t][c];
                            u[i][c] -= sub;
                        }
                    }
                    if d[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if d[t][j] != 0 {
                    let q = d[t][j] / p;
                    if q != 0 {
                        for r in 0..rows {
                            let sub = q * d[r][t];
                            d[r][j] -= sub;
                        }
                        for r in 0..cols {
                            let sub = q * v[r][t];
                            v[r][j] -= sub;
                        }
                    }
                    if d[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            let col_clear = (t + 1..rows).all(|i| d[i][t] == 0);
            let row_clear = (t + 1..cols).all(|j| d[t][j] == 0);
            if !dirty && col_clear && row_clear {
                break;
            }
        }
    }
    for t in 0..rank_bound {
        if d[t][t] < 0 {
            for c in 0..cols {
                d[t][c] = -d[t][c];
            }
            for c in 0..rows {
                u[t][c] = -u[t][c];
            }
        }
    }
    // Enforce the divisor chain d_t | d_{t+1}.
    let mut t = 0;
    while t + 1 < rank_bound {
        let (a, b) = (d[t][t], d[t + 1][t + 1]);
        if a != 0 && b % a != 0 {
            // Fold column t+1 into column t, then rediagonalize from t.
            for r in 0..rows {
                let add = d[r][t + 1];
                d[r][t] += add;
            }
            for r in 0..cols {
                let add = v[r][t + 1];
                v[r][t] += add;
            }
            let sub = resmith(&mut d, &mut u, &mut v, t, rows, cols);
            debug_assert!(sub);
            t = 0;
        } else {
            t += 1;
        }
    }
    let divisors = (0..rank_bound).map(|i| d[i][i]).collect();
    Snf {
        divisors,
        u,
        v,
        rows,
        cols,
    }
}

// One re-diagonalization pass starting at position t; returns true when clean.
fn resmith(d: &mut Mat128, u: &mut Mat128, v: &mut Mat128, t0: usize, rows: usize, cols: usize) -> bool {
    for t in t0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if d[i][j] != 0
                        && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            d.swap(t, pi);
            u.swap(t, pi);
            for row in d.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let p = d[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                if d[i][t] != 0 {
                    let q = d[i][t] / p;
                    if q != 0 {
                        for c in 0..cols {
                            let sub = q * d[t][c];
                            d[i][c] -= sub;
                        }
                        for c in 0..rows {
                            let sub = q * u[t][c];
                            u[i][c] -= sub;
                        }
                    }
                    if d[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if d[t][j] != 0 {
                    let q = d[t][j] / p;
                    if q != 0 {
                        for r in 0..rows {
                            let sub = q * d[r][t];
                            d[r][j] -= sub;
                        }
                        for r in 0..cols {
                            let sub = q * v[r][t];
                            v[r][j] -= sub;
                        }
                    }
                    if d[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            let col_clear = (t + 1..rows).all(|i| d[i][t] == 0);
            let row_clear = (t + 1..cols).all(|j| d[t][j] == 0);
            if !dirty && col_clear && row_clear {
                break;
            }
        }
        if d[t][t] < 0 {
            for c in 0..cols {
                d[t][c] = -d[t][c];
            }
            for c in 0..rows {
                u[t][c] = -u[t][c];
            }
        }
    }
    true
}

pub fn det128(m: &Mat128) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    assert!(m.iter().all(|r| r.len() == n));
    let mut a = m.clone();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Inverse of a unimodular integer matrix via the adjugate.
pub fn inv_unimodular(m: &Mat128) -> Mat128 {
    let n = m.len();
    let d = det128(m);
    assert!(d == 1 || d == -1, "matrix is not unimodular");
    if n == 1 {
        return vec![vec![d]];
    }
    let minor_det = |row: usize, col: usize| -> i128 {
        let sub: Mat128 = (0..n - 1)
            .map(|i| {
                let si = if i < row { i } else { i + 1 };
                (0..n - 1)
                    .map(|j| {
                        let sj = if j < col { j } else { j + 1 };
                        m[si][sj]
                    })
                    .collect()
            })
            .collect();
        det128(&sub)
    };
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    d * sign * minor_det(j, i)
                })
                .collect()
        })
        .collect()
}

/// Solves `m x = b` over the integers, where `m` is given by columns stacked
/// as a row-major matrix (`m` is `rows x cols`). Returns one solution.
pub fn solve(m: &Mat128, b: &[i128]) -> Option<Vec<i128>> {
    let s = snf(m);
    let y = mat_vec(&s.u, b);
    let mut z = vec![0i128; s.cols];
    for (i, &yi) in y.iter().enumerate() {
        if i < s.divisors.len() && s.divisors[i] != 0 {
            if yi % s.divisors[i] != 0 {
                return None;
            }
            z[i] = yi / s.divisors[i];
        } else if yi != 0 {
            return None;
        }
    }
    Some(mat_vec(&s.v, &z))
}

/// Is `v` in the lattice spanned by the given columns?
pub fn lattice_contains(cols: &[Vec<i128>], v: &[i128]) -> bool {
    if cols.is_empty() {
        return v.iter().all(|&x| x == 0);
    }
    let m = transpose(&cols.to_vec());
    solve(&m, v).is_some()
}
