//! Dense Gaussian elimination over F_q.

use crate::scalars::{Fe, Field};

pub type Row = Vec<Fe>;

pub fn dot(f: &Field, a: &[Fe], b: &[Fe]) -> Fe {
    a.iter()
        .zip(b)
        .fold(Fe::ZERO, |acc, (&x, &y)| if x.is_zero() || y.is_zero() { acc } else { f.mul_add(acc, x, y) })
}

/// `dst += c * src`.
pub fn axpy(f: &Field, dst: &mut [Fe], c: Fe, src: &[Fe]) {
    if c.is_zero() {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = f.mul_add(*d, c, s);
        }
    }
}

pub fn scale(f: &Field, row: &mut [Fe], c: Fe) {
    for x in row.iter_mut() {
        *x = f.mul(*x, c);
    }
}

/// Reduced row echelon form in place; zero rows are dropped. Returns the
/// pivot column of each remaining row. When `track` is given it receives
/// the same row operations, so that `rows_out = track_out · rows_in`.
pub fn rref_with(f: &Field, rows: &mut Vec<Row>, mut track: Option<&mut Vec<Row>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, k);
        if let Some(t) = track.as_deref_mut() {
            t.swap(r, k);
        }
        let inv = f.inv(rows[r][c]).expect("nonzero pivot");
        scale(f, &mut rows[r], inv);
        if let Some(t) = track.as_deref_mut() {
            scale(f, &mut t[r], inv);
        }
        let pivot_row = rows[r].clone();
        let pivot_track = track.as_deref().map(|t| t[r].clone());
        for k in 0..rows.len() {
            if k == r || rows[k][c].is_zero() {
                continue;
            }
            let coef = f.neg(rows[k][c]);
            axpy(f, &mut rows[k][c..], coef, &pivot_row[c..]);
            if let (Some(t), Some(pt)) = (track.as_deref_mut(), pivot_track.as_ref()) {
                axpy(f, &mut t[k], coef, pt);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    if let Some(t) = track {
        t.truncate(r);
    }
    pivots
}

pub fn rref(f: &Field, rows: &mut Vec<Row>) -> Vec<usize> {
    rref_with(f, rows, None)
}

/// Basis of {x : M x = 0} for an `m × ncols` matrix given by rows.
pub fn nullspace(f: &Field, rows: &[Row], ncols: usize) -> Vec<Row> {
    let mut m: Vec<Row> = rows.to_vec();
    let pivots = rref(f, &mut m);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Fe::ZERO; ncols];
        v[free] = Fe::ONE;
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = f.neg(row[free]);
        }
        out.push(v);
    }
    out
}

pub fn rank(f: &Field, rows: &[Row]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}
