#include "qftlab/operators.hpp"

#include <cmath>

namespace qftlab {

using RowMajorMap =
    Eigen::Map<Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

OperatorHandle OperatorHandle::dense(CMatrix m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw StructuralError("dense operator must be square and nonempty");
  }
  return OperatorHandle(std::variant<DenseForm, IndexMapForm, CompositeForm>(
      std::in_place_index<0>, DenseForm{std::move(m)}));
}

OperatorHandle OperatorHandle::index_map(std::vector<std::uint64_t> targets,
                                         std::vector<Cplx> phases) {
  const std::size_t n = targets.size();
  if (n == 0) throw StructuralError("index map must be nonempty");
  if (!phases.empty() && phases.size() != n) {
    throw StructuralError("phase vector must match the index map length");
  }
  std::vector<bool> seen(n, false);
  for (std::uint64_t t : targets) {
    if (t >= n || seen[t]) throw StructuralError("index map is not a bijection");
    seen[t] = true;
  }
  return OperatorHandle(std::variant<DenseForm, IndexMapForm, CompositeForm>(
      std::in_place_index<1>, IndexMapForm{std::move(targets), std::move(phases)}));
}

OperatorHandle OperatorHandle::composite(std::vector<OperatorHandle> factors) {
  if (factors.empty()) throw StructuralError("composite needs at least one factor");
  const std::size_t n = factors.front().dim();
  for (const OperatorHandle& f : factors) {
    if (f.dim() != n) throw StructuralError("composite factors must share one dimension");
  }
  return OperatorHandle(std::variant<DenseForm, IndexMapForm, CompositeForm>(
      std::in_place_index<2>, CompositeForm{std::move(factors)}));
}

OperatorHandle::Form OperatorHandle::form() const {
  return static_cast<Form>(rep_.index());
}

std::size_t OperatorHandle::dim() const {
  switch (form()) {
    case Form::Dense:
      return static_cast<std::size_t>(std::get<DenseForm>(rep_).mat.rows());
    case Form::IndexMap:
      return std::get<IndexMapForm>(rep_).targets.size();
    case Form::Composite:
      return std::get<CompositeForm>(rep_).factors.front().dim();
  }
  return 0;
}

void OperatorHandle::apply_in_place(StateVector& state) const {
  if (state.dim() != dim()) throw StructuralError("operator/state dimension mismatch");
  switch (form()) {
    case Form::Dense: {
      const CMatrix& u = std::get<DenseForm>(rep_).mat;
      Eigen::Map<Eigen::VectorXcd> v(state.amps.data(), static_cast<Eigen::Index>(state.dim()));
      v = (u * v).eval();
      return;
    }
    case Form::IndexMap: {
      const IndexMapForm& f = std::get<IndexMapForm>(rep_);
      std::vector<Cplx> out(state.dim());
      if (f.phases.empty()) {
        for (std::size_t i = 0; i < f.targets.size(); ++i) out[f.targets[i]] = state.amps[i];
      } else {
        for (std::size_t i = 0; i < f.targets.size(); ++i) {
          out[f.targets[i]] = f.phases[i] * state.amps[i];
        }
      }
      state.amps.swap(out);
      return;
    }
    case Form::Composite: {
      const auto& factors = std::get<CompositeForm>(rep_).factors;
      for (std::size_t i = factors.size(); i-- > 0;) factors[i].apply_in_place(state);
      return;
    }
  }
}

StateVector OperatorHandle::apply(const StateVector& state) const {
  StateVector out = state;
  apply_in_place(out);
  return out;
}

OperatorHandle OperatorHandle::adjoint() const {
  switch (form()) {
    case Form::Dense:
      return dense(std::get<DenseForm>(rep_).mat.adjoint());
    case Form::IndexMap: {
      const IndexMapForm& f = std::get<IndexMapForm>(rep_);
      const std::size_t n = f.targets.size();
      std::vector<std::uint64_t> inverse(n);
      for (std::size_t i = 0; i < n; ++i) inverse[f.targets[i]] = i;
      std::vector<Cplx> phases;
      if (!f.phases.empty()) {
        phases.resize(n);
        for (std::size_t i = 0; i < n; ++i) phases[f.targets[i]] = std::conj(f.phases[i]);
      }
      return index_map(std::move(inverse), std::move(phases));
    }
    case Form::Composite: {
      const auto& factors = std::get<CompositeForm>(rep_).factors;
      std::vector<OperatorHandle> reversed;
      reversed.reserve(factors.size());
      for (std::size_t i = factors.size(); i-- > 0;) reversed.push_back(factors[i].adjoint());
      return composite(std::move(reversed));
    }
  }
  throw StructuralError("unreachable operator form");
}

CMatrix OperatorHandle::to_dense(std::size_t cap) const {
  if (dim() > cap) throw CapExceededError("dense materialization exceeds the cap");
  switch (form()) {
    case Form::Dense:
      return std::get<DenseForm>(rep_).mat;
    case Form::IndexMap: {
      const IndexMapForm& f = std::get<IndexMapForm>(rep_);
      const Eigen::Index n = static_cast<Eigen::Index>(f.targets.size());
      CMatrix m = CMatrix::Zero(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        m(static_cast<Eigen::Index>(f.targets[i]), i) =
            f.phases.empty() ? Cplx(1.0, 0.0) : f.phases[i];
      }
      return m;
    }
    case Form::Composite: {
      const auto& factors = std::get<CompositeForm>(rep_).factors;
      CMatrix m = factors.front().to_dense(cap);
      for (std::size_t i = 1; i < factors.size(); ++i) m = m * factors[i].to_dense(cap);
      return m;
    }
  }
  throw StructuralError("unreachable operator form");
}

double OperatorHandle::unitarity_defect(std::size_t cap) const {
  switch (form()) {
    case Form::IndexMap: {
      // Bijectivity is enforced at construction; only phases can drift.
      const IndexMapForm& f = std::get<IndexMapForm>(rep_);
      double worst = 0.0;
      for (const Cplx& ph : f.phases) worst = std::max(worst, std::abs(std::abs(ph) - 1.0));
      return worst;
    }
    case Form::Dense:
    case Form::Composite: {
      const CMatrix u = to_dense(cap);
      const Eigen::Index n = u.rows();
      return (u * u.adjoint() - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    }
  }
  throw StructuralError("unreachable operator form");
}

const CMatrix* OperatorHandle::dense_matrix() const {
  const DenseForm* f = std::get_if<DenseForm>(&rep_);
  return f ? &f->mat : nullptr;
}

const std::vector<std::uint64_t>* OperatorHandle::index_targets() const {
  const IndexMapForm* f = std::get_if<IndexMapForm>(&rep_);
  return f ? &f->targets : nullptr;
}

const std::vector<Cplx>* OperatorHandle::index_phases() const {
  const IndexMapForm* f = std::get_if<IndexMapForm>(&rep_);
  return f ? &f->phases : nullptr;
}

const std::vector<OperatorHandle>* OperatorHandle::composite_factors() const {
  const CompositeForm* f = std::get_if<CompositeForm>(&rep_);
  return f ? &f->factors : nullptr;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

OperatorHandle qft(const CharacterBasis& basis, std::size_t cap) {
  const std::uint64_t n = basis.group().order;
  if (n > cap) {
    throw CapExceededError("dense QFT refused above the cap; use qft_apply");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix f(n, n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      f(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) =
          scale * basis.value_at(x, y);
    }
  }
  return OperatorHandle::dense(std::move(f));
}

void qft_apply(const CharacterBasis& basis, StateVector& state, bool adjoint) {
  const std::uint64_t n = basis.group().order;
  if (state.registers != 1 || state.register_dim != n) {
    throw StructuralError("qft_apply needs a one-register state over the basis group");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Cplx> out(n, Cplx(0.0, 0.0));
  for (std::uint64_t y = 0; y < n; ++y) {
    Cplx acc(0.0, 0.0);
    for (std::uint64_t x = 0; x < n; ++x) {
      const Cplx entry = adjoint ? std::conj(basis.value_at(y, x)) : basis.value_at(x, y);
      acc += entry * state.amps[x];
    }
    out[y] = scale * acc;
  }
  state.amps.swap(out);
}

StateVector fourier_state(const CharacterBasis& basis, const GroupElement& x, std::size_t cap) {
  const std::uint64_t n = basis.group().order;
  if (n > cap) throw CapExceededError("fourier state exceeds the cap");
  const std::uint64_t xi = index_of(basis.group(), x);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  StateVector s = StateVector::zero1(n);
  for (std::uint64_t y = 0; y < n; ++y) {
    s.amps[y] = scale * std::conj(basis.value_at(xi, y));
  }
  return s;
}

OperatorHandle translation_op(const GroupSpec& g, const GroupElement& x) {
  const std::uint64_t xi = index_of(g, x);
  std::vector<std::uint64_t> targets(g.order);
  for (std::uint64_t i = 0; i < g.order; ++i) targets[i] = add_indices(g, xi, i);
  return OperatorHandle::index_map(std::move(targets));
}

OperatorHandle a_psi(const Homomorphism& psi) {
  const GroupSpec& g = psi.domain();
  const std::uint64_t n = g.order;
  const std::vector<std::uint64_t> table = psi.index_table(n);
  std::vector<std::uint64_t> targets(n * n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t shift = table[i];
    for (std::uint64_t j = 0; j < n; ++j) {
      targets[i * n + j] = i * n + add_indices(g, j, shift);
    }
  }
  return OperatorHandle::index_map(std::move(targets));
}

OperatorHandle b_psi(const Homomorphism& psi) {
  const GroupSpec& g = psi.domain();
  const std::uint64_t n = g.order;
  const std::vector<std::uint64_t> table = psi.index_table(n);
  std::vector<std::uint64_t> targets(n * n);
  for (std::uint64_t j = 0; j < n; ++j) {
    const std::uint64_t shift = table[j];
    for (std::uint64_t i = 0; i < n; ++i) {
      targets[i * n + j] = add_indices(g, i, shift) * n + j;
    }
  }
  return OperatorHandle::index_map(std::move(targets));
}

OperatorHandle permutation_op(const GroupSpec& g, const std::vector<std::uint64_t>& pi) {
  if (pi.size() != g.order) throw StructuralError("permutation table must cover the group");
  return OperatorHandle::index_map(pi);  // bijectivity validated by index_map
}

namespace {

void apply_dense_to_register(const CMatrix& u, StateVector& state, int reg) {
  const std::size_t n = state.register_dim;
  RowMajorMap w(state.amps.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  if (reg == 1) {
    w = (u * w).eval();
  } else {
    w = (w * u.transpose()).eval();
  }
}

void apply_index_map_to_register(const std::vector<std::uint64_t>& targets,
                                 const std::vector<Cplx>& phases, StateVector& state, int reg) {
  const std::size_t n = state.register_dim;
  std::vector<Cplx> out(state.amps.size());
  if (reg == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const Cplx ph = phases.empty() ? Cplx(1.0, 0.0) : phases[i];
      const std::size_t dst = static_cast<std::size_t>(targets[i]) * n;
      for (std::size_t j = 0; j < n; ++j) out[dst + j] = ph * state.amps[i * n + j];
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      const Cplx ph = phases.empty() ? Cplx(1.0, 0.0) : phases[j];
      const std::size_t dst = static_cast<std::size_t>(targets[j]);
      for (std::size_t i = 0; i < n; ++i) out[i * n + dst] = ph * state.amps[i * n + j];
    }
  }
  state.amps.swap(out);
}

void apply_to_register(const OperatorHandle& op, StateVector& state, int reg) {
  if (const CMatrix* mat = op.dense_matrix()) {
    apply_dense_to_register(*mat, state, reg);
    return;
  }
  if (const auto* targets = op.index_targets()) {
    apply_index_map_to_register(*targets, *op.index_phases(), state, reg);
    return;
  }
  if (const auto* factors = op.composite_factors()) {
    for (std::size_t i = factors->size(); i-- > 0;) {
      apply_to_register((*factors)[i], state, reg);
    }
    return;
  }
  throw StructuralError("unreachable operator form");
}

}  // namespace

void tensor_apply(const OperatorHandle& u, const OperatorHandle& v, StateVector& state) {
  if (state.registers != 2) throw StructuralError("tensor_apply needs a two-register state");
  if (u.dim() != state.register_dim || v.dim() != state.register_dim) {
    throw StructuralError("tensor_apply operator/register dimension mismatch");
  }
  apply_to_register(u, state, 1);
  apply_to_register(v, state, 2);
}

StateVector tensor_apply_dense(const OperatorHandle& u, const OperatorHandle& v,
                               const StateVector& state, std::size_t cap) {
  if (state.registers != 2) throw StructuralError("tensor_apply needs a two-register state");
  const std::size_t n = state.register_dim;
  if (n * n > cap) throw CapExceededError("dense Kronecker cross-check exceeds the cap");
  const CMatrix big = kron(u.to_dense(cap), v.to_dense(cap));
  StateVector out = state;
  Eigen::Map<const Eigen::VectorXcd> in(state.amps.data(),
                                        static_cast<Eigen::Index>(state.amps.size()));
  Eigen::Map<Eigen::VectorXcd> dst(out.amps.data(), static_cast<Eigen::Index>(out.amps.size()));
  dst = big * in;
  return out;
}

}  // namespace qftlab
