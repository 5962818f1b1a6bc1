#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <fstream>

namespace qpca::testing {

Quaternion random_quaternion(Rng& rng) {
  return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
          rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
}

QVector random_qvector(Eigen::Index n, Rng& rng) {
  QVector w(n);
  for (int c = 0; c < 4; ++c) {
    for (Eigen::Index i = 0; i < n; ++i) {
      w.plane(c)[i] = rng.uniform(-1.0, 1.0);
    }
  }
  return w;
}

QMatrix random_qmatrix(Eigen::Index m, Eigen::Index n, Rng& rng) {
  QMatrix a(m, n);
  for (int c = 0; c < 4; ++c) {
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        a.plane(c)(i, j) = rng.uniform(-1.0, 1.0);
      }
    }
  }
  return a;
}

Eigen::MatrixXd covariance_rep(std::span<const QMatrix> samples) {
  const Eigen::Index n = samples[0].cols();
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(4 * n, 4 * n);
  for (const QMatrix& f : samples) {
    const Eigen::MatrixXd rep = real_rep(f);
    cov += rep.transpose() * rep;
  }
  return cov;
}

EigenOracle eigen_oracle(std::span<const QMatrix> samples, Eigen::Index r) {
  const Eigen::MatrixXd cov = covariance_rep(samples);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  // Eigen sorts ascending; flip to descending.
  const Eigen::Index total = cov.rows();
  EigenOracle out;
  out.top_subspace.resize(total, 4 * r);
  out.eigenvalues.resize(r);
  for (Eigen::Index g = 0; g < r; ++g) {
    for (Eigen::Index c = 0; c < 4; ++c) {
      out.top_subspace.col(4 * g + c) =
          solver.eigenvectors().col(total - 1 - (4 * g + c));
    }
    out.eigenvalues[g] = solver.eigenvalues()[total - 1 - 4 * g];
  }
  return out;
}

double largest_principal_angle(const Eigen::MatrixXd& a,
                               const Eigen::MatrixXd& b) {
  const Eigen::MatrixXd cross = a.transpose() * b;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross);
  const double cos_min =
      std::clamp(svd.singularValues().minCoeff(), -1.0, 1.0);
  return std::acos(cos_min);
}

double best_random_inner(const QVector& v, double p, int candidates,
                         std::uint64_t seed) {
  const Eigen::VectorXd v_rep = real_rep(v);
  Rng rng(seed);
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < candidates; ++i) {
    const QVector w = random_unit_lp(v.size(), p, rng);
    best = std::max(best, v_rep.dot(real_rep(w)));
  }
  return best;
}

double tangent_lower_bound_rhs(const QVector& w, const QVector& v, double p) {
  const Eigen::VectorXd absq_v = absq_rep(v);
  const Eigen::VectorXd signq_v = signq_rep(v);
  // 0^0 = 1 at p = 1 (std::pow semantics), matching the bound's convention.
  const Eigen::VectorXd gradient =
      (absq_v.array().pow(p - 1.0) * signq_v.array()).matrix();
  return p * gradient.dot(real_rep(w)) +
         (1.0 - p) * std::pow(lp_norm(v, p), p);
}

double tangent_upper_bound_rhs(const QVector& w, const QVector& v, double p) {
  const Eigen::VectorXd abs_v = abs(v);
  const Eigen::VectorXd abs_w = abs(w);
  return p * abs_v.array().pow(p - 1.0).matrix().dot(abs_w) +
         (1.0 - p) * std::pow(lp_norm(v, p), p);
}

double group_norm_pow_from_rep(const Eigen::VectorXd& rep, double p) {
  const Eigen::Index n = rep.size() / 4;
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double sq = 0.0;
    for (Eigen::Index c = 0; c < 4; ++c) {
      sq += rep[c * n + i] * rep[c * n + i];
    }
    total += std::pow(std::sqrt(sq), p);
  }
  return total;
}

Dataset make_benchmark_dataset(int classes, int per_class, Eigen::Index rows,
                               Eigen::Index cols, double sigma,
                               std::uint64_t seed) {
  Rng rng(seed);
  Dataset dataset;
  for (int cls = 0; cls < classes; ++cls) {
    QMatrix tmpl(rows, cols);
    for (int c = 1; c <= 3; ++c) {
      for (Eigen::Index y = 0; y < rows; ++y) {
        for (Eigen::Index x = 0; x < cols; ++x) {
          tmpl.plane(c)(y, x) = static_cast<double>(rng.uniform_int(256));
        }
      }
    }
    for (int s = 0; s < per_class; ++s) {
      QMatrix img = tmpl;
      for (int c = 1; c <= 3; ++c) {
        for (Eigen::Index y = 0; y < rows; ++y) {
          for (Eigen::Index x = 0; x < cols; ++x) {
            const double noisy =
                std::round(img.plane(c)(y, x) + rng.normal(0.0, sigma));
            img.plane(c)(y, x) = std::clamp(noisy, 0.0, 255.0);
          }
        }
      }
      dataset.add({"class" + std::to_string(cls), img, "", false});
    }
  }
  return dataset;
}

std::filesystem::path write_benchmark_dataset(
    const std::filesystem::path& dir, int classes, int per_class,
    Eigen::Index rows, Eigen::Index cols, double sigma, std::uint64_t seed) {
  std::filesystem::create_directories(dir);
  const Dataset dataset =
      make_benchmark_dataset(classes, per_class, rows, cols, sigma, seed);
  const std::filesystem::path manifest = dir / "manifest.tsv";
  std::ofstream out(manifest);
  for (size_t i = 0; i < dataset.size(); ++i) {
    const std::string name =
        dataset[i].label + "_" + std::to_string(i) + ".ppm";
    save_image(dir / name, dataset[i].image);
    out << dataset[i].label << '\t' << name << '\n';
  }
  return manifest;
}

}  // namespace qpca::testing
