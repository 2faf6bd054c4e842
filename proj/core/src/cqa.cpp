#include "sncqa/cqa.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "sncqa/ed.hpp"
#include "sncqa/schur.hpp"

namespace sncqa {

using cd = std::complex<double>;

CQAParams::CQAParams(int n, int p) : n_(n), p_(p) {
  if (n < 1) throw std::invalid_argument("CQAParams needs n >= 1");
  if (p < 0) throw std::invalid_argument("CQAParams needs p >= 0");
  values_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p) * per_layer(n));
}

int CQAParams::pair_index(int n, int k, int l) {
  if (k > l) std::swap(k, l);
  if (k < 1 || l > n) throw std::out_of_range("YJM pair index out of range");
  // Rows k' < k contribute n - k' + 1 entries each.
  return (k - 1) * n - (k - 1) * (k - 2) / 2 + (l - k);
}

double CQAParams::beta(int layer, int k, int l) const {
  return values_[layer * per_layer(n_) + pair_index(n_, k, l)];
}

void CQAParams::set_beta(int layer, int k, int l, double value) {
  values_[layer * per_layer(n_) + pair_index(n_, k, l)] = value;
}

double CQAParams::gamma(int layer) const { return values_[layer * per_layer(n_) + pairs(n_)]; }

void CQAParams::set_gamma(int layer, double value) { values_[layer * per_layer(n_) + pairs(n_)] = value; }

Eigen::MatrixXd CQAParams::beta_matrix(int layer) const {
  Eigen::MatrixXd m(n_, n_);
  for (int k = 1; k <= n_; ++k) {
    for (int l = k; l <= n_; ++l) m(k - 1, l - 1) = m(l - 1, k - 1) = beta(layer, k, l);
  }
  return m;
}

namespace {

// dim x n table of x_k(T): 1 for k = 1, content otherwise.
Eigen::MatrixXd yjm_table(const IrrepRep& rep) {
  Eigen::MatrixXd x(rep.dim(), rep.n());
  x.col(0).setOnes();
  for (int k = 2; k <= rep.n(); ++k) x.col(k - 1) = rep.yjm(k).cast<double>();
  return x;
}

}  // namespace

Eigen::VectorXd mixer_phases(const IrrepRep& rep, const Eigen::MatrixXd& beta) {
  const int n = rep.n();
  if (beta.rows() != n || beta.cols() != n) throw std::invalid_argument("beta must be n x n");
  if (!beta.allFinite()) throw std::invalid_argument("beta has non-finite entries");
  const Eigen::MatrixXd x = yjm_table(rep);
  Eigen::VectorXd d = Eigen::VectorXd::Zero(rep.dim());
  for (int k = 0; k < n; ++k) {
    for (int l = k; l < n; ++l) {
      if (beta(k, l) != 0.0) d += beta(k, l) * x.col(k).cwiseProduct(x.col(l));
    }
  }
  return d;
}

CQAAnsatz::CQAAnsatz(const IrrepRep& rep, const IrrepHamiltonian& h, LayerOrder order)
    : n_(rep.n()), shape_(rep.shape()), order_(order), shift_(h.shift) {
  if (h.shape != rep.shape() || h.dim() != rep.dim()) {
    throw std::invalid_argument("Hamiltonian shape (" + h.shape.to_string() + ") does not match irrep (" +
                                rep.shape().to_string() + ")");
  }
  shifted_ = h.shifted();
  auto sys = eigensystem(h.matrix);
  eigenvalues_ = std::move(sys.eigenvalues);
  eigenvectors_ = std::move(sys.vectors);

  const Eigen::MatrixXd x = yjm_table(rep);
  products_.resize(rep.dim(), CQAParams::pairs(n_));
  for (int k = 1; k <= n_; ++k) {
    for (int l = k; l <= n_; ++l) {
      products_.col(CQAParams::pair_index(n_, k, l)) = x.col(k - 1).cwiseProduct(x.col(l - 1));
    }
  }
}

Eigen::VectorXd CQAAnsatz::phases(const CQAParams& params, int layer) const {
  const int pairs = CQAParams::pairs(n_);
  return products_ * params.values().segment(static_cast<Eigen::Index>(layer) * CQAParams::per_layer(n_), pairs);
}

void CQAAnsatz::evolve(double gamma, Eigen::VectorXcd& psi) const {
  if (gamma == 0.0) return;
  // Real and imaginary parts go through the real eigenvectors separately.
  Eigen::VectorXd re = eigenvectors_.transpose() * psi.real();
  Eigen::VectorXd im = eigenvectors_.transpose() * psi.imag();
  for (Eigen::Index i = 0; i < re.size(); ++i) {
    const double c = std::cos(gamma * eigenvalues_[i]);
    const double s = std::sin(gamma * eigenvalues_[i]);
    const double r = re[i];
    re[i] = c * r + s * im[i];
    im[i] = c * im[i] - s * r;
  }
  psi.real() = eigenvectors_ * re;
  psi.imag() = eigenvectors_ * im;
}

void CQAAnsatz::mix(const Eigen::VectorXd& d, Eigen::VectorXcd& psi) {
  for (Eigen::Index i = 0; i < psi.size(); ++i) psi[i] *= std::polar(1.0, -d[i]);
}

CQAState CQAAnsatz::apply_layer(const CQAState& state, const CQAParams& params, int layer) const {
  if (state.shape != shape_ || state.amplitudes.size() != dim()) {
    throw std::invalid_argument("state shape (" + state.shape.to_string() + ") does not match the ansatz (" +
                                shape_.to_string() + ")");
  }
  CQAState out = state;
  if (order_ == LayerOrder::kHamiltonianFirst) {
    evolve(params.gamma(layer), out.amplitudes);
    mix(phases(params, layer), out.amplitudes);
  } else {
    mix(phases(params, layer), out.amplitudes);
    evolve(params.gamma(layer), out.amplitudes);
  }
  return out;
}

Eigen::VectorXcd CQAAnsatz::forward(const CQAParams& params, const Eigen::VectorXcd& init) const {
  if (params.n() != n_) throw std::invalid_argument("parameters were built for a different n");
  if (init.size() != dim()) throw std::invalid_argument("initial state has the wrong dimension");
  CQAState state{shape_, init};
  for (int layer = 0; layer < params.p(); ++layer) state = apply_layer(state, params, layer);
  return state.amplitudes;
}

Eigen::VectorXd CQAAnsatz::real_state(const Eigen::VectorXcd& psi, bool* used_imaginary) const {
  Eigen::VectorXd phi = psi.real();
  bool imag = false;
  if (phi.norm() < 1e-12) {
    phi = psi.imag();
    imag = true;
    if (phi.norm() < 1e-12) throw std::runtime_error("both real and imaginary parts of the state vanish");
  }
  if (used_imaginary) *used_imaginary = imag;
  return phi.normalized();
}

EnergyValue CQAAnsatz::energy(const CQAParams& params, const Eigen::VectorXcd& init) const {
  EnergyValue e;
  Eigen::VectorXd phi = real_state(forward(params, init), &e.used_imaginary);
  e.shifted = phi.dot(shifted_ * phi);
  e.unshifted = e.shifted - shift_;
  return e;
}

Eigen::VectorXd CQAAnsatz::gradient(const CQAParams& params, const Eigen::VectorXcd& init,
                                    EnergyValue* value) const {
  if (params.n() != n_) throw std::invalid_argument("parameters were built for a different n");
  const int p = params.p();
  const int pairs = CQAParams::pairs(n_);

  // Forward pass, keeping the state after every elementary step.
  std::vector<Eigen::VectorXd> layer_phases(static_cast<std::size_t>(p));
  std::vector<Eigen::VectorXcd> states;
  states.reserve(static_cast<std::size_t>(2 * p + 1));
  states.push_back(init);
  const bool h_first = order_ == LayerOrder::kHamiltonianFirst;
  for (int layer = 0; layer < p; ++layer) {
    layer_phases[static_cast<std::size_t>(layer)] = phases(params, layer);
    for (int step = 0; step < 2; ++step) {
      Eigen::VectorXcd next = states.back();
      if ((step == 0) == h_first) {
        evolve(params.gamma(layer), next);
      } else {
        mix(layer_phases[static_cast<std::size_t>(layer)], next);
      }
      states.push_back(std::move(next));
    }
  }

  const Eigen::VectorXcd& psi = states.back();
  Eigen::VectorXd phi = psi.real();
  bool imag = false;
  if (phi.norm() < 1e-12) {
    phi = psi.imag();
    imag = true;
    if (phi.norm() < 1e-12) throw std::runtime_error("both real and imaginary parts of the state vanish");
  }
  const double norm2 = phi.squaredNorm();
  const Eigen::VectorXd h_phi = shifted_ * phi;
  const double e = phi.dot(h_phi) / norm2;
  if (value) *value = {e, e - shift_, imag};

  // a holds dE/dRe(psi) + i dE/dIm(psi).
  const Eigen::VectorXd g = 2.0 * (h_phi - e * phi) / norm2;
  Eigen::VectorXcd a = imag ? Eigen::VectorXcd(cd(0.0, 1.0) * g.cast<cd>()) : Eigen::VectorXcd(g.cast<cd>());

  Eigen::VectorXd grad = Eigen::VectorXd::Zero(params.size());
  for (int layer = p - 1; layer >= 0; --layer) {
    const auto base = static_cast<Eigen::Index>(layer) * CQAParams::per_layer(n_);
    for (int step = 1; step >= 0; --step) {
      const Eigen::VectorXcd& out = states[static_cast<std::size_t>(2 * layer + step + 1)];
      if ((step == 0) == h_first) {
        // d out / d gamma = -i H out.
        Eigen::VectorXcd h_out = out;
        Eigen::VectorXd re = eigenvectors_.transpose() * out.real();
        Eigen::VectorXd im = eigenvectors_.transpose() * out.imag();
        re = eigenvectors_ * eigenvalues_.cwiseProduct(re);
        im = eigenvectors_ * eigenvalues_.cwiseProduct(im);
        h_out.real() = re;
        h_out.imag() = im;
        grad[base + pairs] = a.dot(h_out).imag();
        evolve(-params.gamma(layer), a);
      } else {
        const Eigen::VectorXd& d = layer_phases[static_cast<std::size_t>(layer)];
        Eigen::VectorXd dd(out.size());
        for (Eigen::Index t = 0; t < out.size(); ++t) dd[t] = (std::conj(a[t]) * out[t]).imag();
        grad.segment(base, pairs) = products_.transpose() * dd;
        mix(-d, a);
      }
    }
  }
  return grad;
}

Eigen::VectorXcd default_initial_state(const IrrepRep& rep) {
  const auto& shape = rep.shape();
  if (shape.num_rows() <= 2 && shape.size() <= 16) {
    const int n = shape.size();
    const int k = shape.num_rows() == 2 ? shape.row(0) - shape.row(1) : n;
    auto terms = expand_initial_state(n, k, default_ordering(n, k));
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(rep.dim());
    for (const auto& term : terms) v[rep.index_of(term.tableau)] = term.coefficient;
    if (v.norm() > 1e-12) return v / v.norm();
  }
  return Eigen::VectorXcd::Constant(rep.dim(), cd(1.0 / std::sqrt(static_cast<double>(rep.dim())), 0.0));
}

}  // namespace sncqa
