#include "vertebrate/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vertebrate {

namespace {

double off_diagonal_norm(const std::vector<std::vector<double>>& a) {
  double sum = 0.0;
  const std::size_t n = a.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) sum += a[p][q] * a[p][q];
  }
  return std::sqrt(sum);
}

// Flips the vector so its largest-magnitude entry (first among equals)
// is positive.
void fix_sign(std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  if (v[best] < 0.0) {
    for (auto& x : v) x = -x;
  }
}

}  // namespace

void symmetric_eigen(std::vector<std::vector<double>> a, std::vector<double>& eigenvalues,
                     std::vector<std::vector<double>>& eigenvectors) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a[i][j]));
  }
  const double tol = std::max(scale, 1.0) * 1e-14;

  for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > tol; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) <= tol * 1e-2) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i][i] > a[j][j]; });
  eigenvalues.assign(n, 0.0);
  eigenvectors.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t r = 0; r < n; ++r) {
    eigenvalues[r] = a[order[r]][order[r]];
    for (std::size_t k = 0; k < n; ++k) eigenvectors[r][k] = v[k][order[r]];
  }
}

PcaModel fit_pca(const std::vector<std::vector<double>>& rows, std::size_t out_dim) {
  const std::size_t n = rows.size();
  if (n < 2) throw std::invalid_argument("pca requires at least 2 rows");
  const std::size_t dim = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != dim) throw std::invalid_argument("pca: ragged input rows");
  }
  if (out_dim == 0 || out_dim > dim) {
    throw std::invalid_argument("pca: out_dim must be in [1, dim]");
  }

  PcaModel model;
  model.mean.assign(dim, 0.0);
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < dim; ++j) model.mean[j] += r[j];
  }
  for (auto& m : model.mean) m /= static_cast<double>(n);

  std::vector<std::vector<double>> centered(n, std::vector<double>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < dim; ++j) centered[i][j] = rows[i][j] - model.mean[j];
  }

  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  if (dim <= n) {
    std::vector<std::vector<double>> cov(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t p = 0; p < dim; ++p) {
        const double xp = centered[i][p];
        if (xp == 0.0) continue;
        for (std::size_t q = p; q < dim; ++q) cov[p][q] += xp * centered[i][q];
      }
    }
    const double denom = static_cast<double>(n - 1);
    for (std::size_t p = 0; p < dim; ++p) {
      for (std::size_t q = p; q < dim; ++q) {
        cov[p][q] /= denom;
        cov[q][p] = cov[p][q];
      }
    }
    symmetric_eigen(std::move(cov), eigenvalues, eigenvectors);
    for (std::size_t k = 0; k < out_dim; ++k) {
      model.components.push_back(eigenvectors[k]);
      model.eigenvalues.push_back(eigenvalues[k]);
    }
  } else {
    // Gram trick: eigenvectors of X Xt map to components Xt u / sqrt(lambda).
    std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double dot = 0.0;
        for (std::size_t k = 0; k < dim; ++k) dot += centered[i][k] * centered[j][k];
        gram[i][j] = dot;
        gram[j][i] = dot;
      }
    }
    symmetric_eigen(std::move(gram), eigenvalues, eigenvectors);
    const double lambda_floor = std::max(eigenvalues.empty() ? 0.0 : eigenvalues[0], 1.0) * 1e-12;
    for (std::size_t k = 0; k < eigenvalues.size() && model.components.size() < out_dim; ++k) {
      if (eigenvalues[k] <= lambda_floor) break;
      std::vector<double> comp(dim, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        const double u = eigenvectors[k][i];
        if (u == 0.0) continue;
        for (std::size_t j = 0; j < dim; ++j) comp[j] += u * centered[i][j];
      }
      const double inv = 1.0 / std::sqrt(eigenvalues[k]);
      for (auto& x : comp) x *= inv;
      model.components.push_back(std::move(comp));
      model.eigenvalues.push_back(eigenvalues[k] / static_cast<double>(n - 1));
    }
    if (model.components.size() < out_dim) {
      throw std::invalid_argument("pca: out_dim exceeds the rank of the centered data");
    }
  }

  for (auto& comp : model.components) fix_sign(comp);
  return model;
}

std::vector<double> pca_transform(const PcaModel& model, const std::vector<double>& row) {
  if (row.size() != model.mean.size()) throw std::invalid_argument("pca: dimension mismatch");
  std::vector<double> out(model.components.size(), 0.0);
  for (std::size_t k = 0; k < model.components.size(); ++k) {
    double dot = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      dot += (row[j] - model.mean[j]) * model.components[k][j];
    }
    out[k] = dot;
  }
  return out;
}

std::vector<std::vector<double>> pca_reduce_rows(const std::vector<std::vector<double>>& rows,
                                                 std::size_t out_dim) {
  const PcaModel model = fit_pca(rows, out_dim);
  std::vector<std::vector<double>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(pca_transform(model, r));
  return out;
}

}  // namespace vertebrate
