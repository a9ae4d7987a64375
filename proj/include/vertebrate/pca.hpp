// Principal component analysis via a cyclic Jacobi eigensolver.
// Deterministic: eigenvalues sorted descending (stable), and each
// component's sign is fixed so its largest-magnitude entry is positive.
#pragma once

#include <cstddef>
#include <vector>

namespace vertebrate {

struct PcaModel {
  std::vector<double> mean;                      // column means of the fit data
  std::vector<std::vector<double>> components;   // [k][dim], orthonormal rows
  std::vector<double> eigenvalues;               // descending, aligned with components
};

// Full eigen-decomposition of a symmetric matrix. Returns pairs sorted by
// descending eigenvalue; eigenvectors[i] is the unit eigenvector for
// eigenvalues[i].
void symmetric_eigen(std::vector<std::vector<double>> matrix, std::vector<double>& eigenvalues,
                     std::vector<std::vector<double>>& eigenvectors);

// rows: n x dim, n >= 2, out_dim <= dim. When dim > n the Gram-matrix route
// is used and out_dim must not exceed the centered data's rank support (n).
PcaModel fit_pca(const std::vector<std::vector<double>>& rows, std::size_t out_dim);

std::vector<double> pca_transform(const PcaModel& model, const std::vector<double>& row);

std::vector<std::vector<double>> pca_reduce_rows(const std::vector<std::vector<double>>& rows,
                                                 std::size_t out_dim);

}  // namespace vertebrate
