//! Laplacian spectra of finite graphs: closed forms for cycles, complete
//! graphs and paths, and a Jacobi eigensolver for anything else.

use crate::specialfn::sinpi;
use crate::{Error, Result};

/// Largest dense Laplacian accepted by [`dense_laplacian_eigenvalues`].
pub const MAX_DENSE_ORDER: usize = 200;

/// Sorted Laplacian eigenvalues of a graph on `vertex_count` vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteGraphSpectrum {
    vertex_count: usize,
    eigenvalues: Vec<f64>,
}

impl FiniteGraphSpectrum {
    /// Sorts the eigenvalues and clamps round-off negatives to zero.
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>) -> Result<Self> {
        if eigenvalues.is_empty() {
            return Err(Error::domain("FiniteGraphSpectrum", "spectrum is empty"));
        }
        let scale = eigenvalues.iter().fold(1.0f64, |m, l| m.max(l.abs()));
        for l in eigenvalues.iter_mut() {
            if !l.is_finite() || *l < -1e-9 * scale {
                return Err(Error::domain(
                    "FiniteGraphSpectrum",
                    format!("eigenvalue {l} is negative"),
                ));
            }
            *l = l.max(0.0);
        }
        eigenvalues.sort_by(f64::total_cmp);
        Ok(FiniteGraphSpectrum {
            vertex_count: eigenvalues.len(),
            eigenvalues,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    fn zero_threshold(&self) -> f64 {
        1e-9 * self.eigenvalues.last().copied().unwrap_or(0.0).max(1.0)
    }

    /// Eigenvalues treated as zero modes; one per connected component.
    pub fn zero_multiplicity(&self) -> usize {
        let cut = self.zero_threshold();
        self.eigenvalues.iter().take_while(|&&l| l <= cut).count()
    }

    pub fn nonzero_eigenvalues(&self) -> &[f64] {
        &self.eigenvalues[self.zero_multiplicity()..]
    }

    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// The cycle ℤ/nℤ: 4 sin²(πk/n), k = 0..n−1.
pub fn cycle_spectrum(n: usize) -> Result<FiniteGraphSpectrum> {
    if n < 2 {
        return Err(Error::domain("cycle_spectrum", format!("n = {n} must be at least 2")));
    }
    FiniteGraphSpectrum::from_eigenvalues((0..n).map(|k| 4.0 * sinpi(k as f64 / n as f64).powi(2)).collect())
}

/// The complete graph K_N: 0 once and N with multiplicity N−1.
pub fn complete_graph_spectrum(n: usize) -> Result<FiniteGraphSpectrum> {
    if n < 1 {
        return Err(Error::domain("complete_graph_spectrum", "need at least one vertex"));
    }
    let mut e = vec![n as f64; n];
    e[0] = 0.0;
    FiniteGraphSpectrum::from_eigenvalues(e)
}

/// The path on N vertices: 4 sin²(πk/2N), k = 0..N−1.
pub fn path_spectrum(n: usize) -> Result<FiniteGraphSpectrum> {
    if n < 1 {
        return Err(Error::domain("path_spectrum", "need at least one vertex"));
    }
    FiniteGraphSpectrum::from_eigenvalues((0..n).map(|k| 4.0 * sinpi(k as f64 / (2 * n) as f64).powi(2)).collect())
}

/// Laplacian of a simple graph given by its edge list.
pub fn laplacian_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<f64>>> {
    let mut m = vec![vec![0.0; n]; n];
    for &(i, j) in edges {
        if i >= n || j >= n || i == j {
            return Err(Error::domain("laplacian_from_edges", format!("bad edge ({i}, {j})")));
        }
        m[i][j] -= 1.0;
        m[j][i] -= 1.0;
        m[i][i] += 1.0;
        m[j][j] += 1.0;
    }
    Ok(m)
}

/// Spectrum of a symmetric Laplacian (zero row sums) by cyclic Jacobi rotations.
pub fn dense_laplacian_eigenvalues(matrix: &[Vec<f64>]) -> Result<FiniteGraphSpectrum> {
    const F: &str = "dense_laplacian_eigenvalues";
    let n = matrix.len();
    if n == 0 || n > MAX_DENSE_ORDER {
        return Err(Error::domain(F, format!("order {n} outside 1..={MAX_DENSE_ORDER}")));
    }
    let scale = matrix.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(Error::domain(F, "matrix is not square"));
        }
        if row.iter().sum::<f64>().abs() > 1e-12 * scale * n as f64 {
            return Err(Error::domain(F, format!("row {i} does not sum to zero")));
        }
        for j in 0..i {
            if (row[j] - matrix[j][i]).abs() > 1e-12 * scale {
                return Err(Error::domain(F, format!("entries ({i}, {j}) and ({j}, {i}) differ")));
            }
        }
    }
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off.sqrt() <= 1e-15 * scale * n as f64 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                let (head, tail) = a.split_at_mut(q);
                for (apk, aqk) in head[p].iter_mut().zip(tail[0].iter_mut()) {
                    let (x, y) = (*apk, *aqk);
                    *apk = c * x - s * y;
                    *aqk = s * x + c * y;
                }
            }
        }
    }
    FiniteGraphSpectrum::from_eigenvalues((0..n).map(|i| a[i][i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_spectra() {
        let c4 = cycle_spectrum(4).unwrap();
        for (got, want) in c4.eigenvalues().iter().zip([0.0, 2.0, 2.0, 4.0]) {
            assert!((got - want).abs() < 1e-14);
        }
        assert_eq!(complete_graph_spectrum(4).unwrap().eigenvalues(), &[0.0, 4.0, 4.0, 4.0]);
        let p3 = path_spectrum(3).unwrap();
        for (got, want) in p3.eigenvalues().iter().zip([0.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-14);
        }
        assert_eq!(c4.zero_multiplicity(), 1);
        assert_eq!(c4.nonzero_eigenvalues().len(), 3);
        assert!((c4.trace() - 8.0).abs() < 1e-12);
    }

    #[test]
    fn jacobi_matches_closed_forms() {
        for n in [3usize, 7, 12, 40] {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let dense = dense_laplacian_eigenvalues(&laplacian_from_edges(n, &edges).unwrap()).unwrap();
            let exact = cycle_spectrum(n).unwrap();
            for (a, b) in dense.eigenvalues().iter().zip(exact.eigenvalues()) {
                assert!((a - b).abs() < 1e-9 * b.max(1.0), "n = {n}");
            }
            let path: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let dense = dense_laplacian_eigenvalues(&laplacian_from_edges(n, &path).unwrap()).unwrap();
            for (a, b) in dense.eigenvalues().iter().zip(path_spectrum(n).unwrap().eigenvalues()) {
                assert!((a - b).abs() < 1e-9 * b.max(1.0));
            }
        }
    }

    #[test]
    fn jacobi_rejects_bad_input() {
        let asym = vec![vec![1.0, -1.0], vec![-0.5, 0.5]];
        assert!(dense_laplacian_eigenvalues(&asym).is_err());
        let rowsum = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        assert!(dense_laplacian_eigenvalues(&rowsum).is_err());
        assert!(dense_laplacian_eigenvalues(&[]).is_err());
    }

    #[test]
    fn disconnected_graph_has_two_zero_modes() {
        let m = laplacian_from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let s = dense_laplacian_eigenvalues(&m).unwrap();
        assert_eq!(s.zero_multiplicity(), 2);
    }
}
