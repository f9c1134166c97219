#include "hbo/operads.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hbo/error.hpp"

namespace hbo {

MoleculeType::MoleculeType(int d, std::vector<int> electrons)
    : d_(d), electrons_(std::move(electrons)) {
  if (d_ < 1) fail(ErrorCode::invalid_argument, "molecule width d must be >= 1");
  if (electrons_.size() < 2) {
    fail(ErrorCode::invalid_argument, "molecule type needs at least one nucleus");
  }
  for (int k : electrons_) {
    if (k < 0) fail(ErrorCode::invalid_argument, "electron counts must be >= 0");
  }
}

int MoleculeType::particle_count() const {
  return d_ * arity() + std::accumulate(electrons_.begin(), electrons_.end(), 0);
}

int MoleculeType::nucleus_offset(int i) const {
  if (i < 1 || i > arity()) {
    fail(ErrorCode::invalid_argument, "nucleus index out of range");
  }
  int off = (i - 1) * d_;
  for (int t = 0; t < i; ++t) off += electrons_[static_cast<std::size_t>(t)];
  return off;
}

std::vector<int> MoleculeType::nucleus_slots() const {
  std::vector<int> slots;
  slots.reserve(static_cast<std::size_t>(d_ * arity()));
  for (int i = 1; i <= arity(); ++i) {
    const int off = nucleus_offset(i);
    for (int t = 1; t <= d_; ++t) slots.push_back(off + t);
  }
  return slots;
}

bool MoleculeType::electron_free() const {
  return std::all_of(electrons_.begin(), electrons_.end(),
                     [](int k) { return k == 0; });
}

std::string MoleculeType::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < electrons_.size(); ++i) {
    if (i) os << ',';
    os << electrons_[i];
  }
  os << ")@d" << d_;
  return os.str();
}

MoleculeType master_unit(int d) { return MoleculeType(d, {0, 0}); }

MoleculeType master_compose(const MoleculeType& k,
                            const std::vector<MoleculeType>& parts) {
  const int n = k.arity();
  if (static_cast<int>(parts.size()) != n) {
    fail(ErrorCode::invalid_argument,
         "composition needs one part per nucleus, got " +
             std::to_string(parts.size()) + " for arity " + std::to_string(n));
  }
  for (const MoleculeType& p : parts) {
    if (p.d() != k.d()) fail(ErrorCode::invalid_argument, "parts must share d");
  }
  // splice part t into nucleus t, merging the boundary electron counts
  std::vector<int> out;
  out.push_back(k.electrons()[0] + parts[0].electrons()[0]);
  for (int t = 0; t < n; ++t) {
    const std::vector<int>& pe = parts[static_cast<std::size_t>(t)].electrons();
    for (std::size_t u = 1; u + 1 < pe.size(); ++u) out.push_back(pe[u]);
    int boundary = pe.back() + k.electrons()[static_cast<std::size_t>(t + 1)];
    if (t + 1 < n) boundary += parts[static_cast<std::size_t>(t + 1)].electrons()[0];
    out.push_back(boundary);
  }
  return MoleculeType(k.d(), std::move(out));
}

MoleculeType master_insert(const MoleculeType& k, int slot, const MoleculeType& part) {
  if (slot < 1 || slot > k.arity()) {
    fail(ErrorCode::invalid_argument, "composition slot out of range");
  }
  if (part.d() != k.d()) fail(ErrorCode::invalid_argument, "parts must share d");
  const std::vector<int>& ke = k.electrons();
  const std::vector<int>& pe = part.electrons();
  std::vector<int> out;
  out.reserve(ke.size() + pe.size() - 2);
  out.insert(out.end(), ke.begin(), ke.begin() + (slot - 1));
  out.push_back(ke[static_cast<std::size_t>(slot - 1)] + pe.front());
  out.insert(out.end(), pe.begin() + 1, pe.end() - 1);
  out.push_back(pe.back() + ke[static_cast<std::size_t>(slot)]);
  out.insert(out.end(), ke.begin() + slot + 1, ke.end());
  return MoleculeType(k.d(), std::move(out));
}

Perm sym_compose(const Perm& tau, const std::vector<Perm>& sigmas) {
  const int k = tau.size();
  if (static_cast<int>(sigmas.size()) != k) {
    fail(ErrorCode::invalid_argument, "block composition needs one block per letter");
  }
  std::vector<int> sizes(static_cast<std::size_t>(k));
  std::vector<int> offs(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    sizes[static_cast<std::size_t>(i)] = sigmas[static_cast<std::size_t>(i)].size();
    if (i > 0) {
      offs[static_cast<std::size_t>(i)] =
          offs[static_cast<std::size_t>(i - 1)] + sizes[static_cast<std::size_t>(i - 1)];
    }
  }
  // block i lands at target position tau(i); its new offset is the total size
  // of the blocks targeted before it
  std::vector<int> by_target(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) by_target[static_cast<std::size_t>(tau(i) - 1)] = i;
  std::vector<int> new_off(static_cast<std::size_t>(k));
  int acc = 0;
  for (int pos = 0; pos < k; ++pos) {
    const int block = by_target[static_cast<std::size_t>(pos)];
    new_off[static_cast<std::size_t>(block - 1)] = acc;
    acc += sizes[static_cast<std::size_t>(block - 1)];
  }
  std::vector<int> images(static_cast<std::size_t>(acc));
  for (int i = 0; i < k; ++i) {
    const Perm& s = sigmas[static_cast<std::size_t>(i)];
    for (int t = 1; t <= s.size(); ++t) {
      images[static_cast<std::size_t>(offs[static_cast<std::size_t>(i)] + t - 1)] =
          new_off[static_cast<std::size_t>(i)] + s(t);
    }
  }
  return Perm(std::move(images));
}

FElement::FElement(MoleculeType type, Perm realized)
    : type_(std::move(type)), realized_(std::move(realized)) {
  if (type_.d() != 1) {
    fail(ErrorCode::invalid_argument, "team permutations live on d = 1 molecules");
  }
  if (realized_.size() != type_.particle_count()) {
    fail(ErrorCode::invalid_argument,
         "permutation size " + std::to_string(realized_.size()) +
             " does not match molecule size " + std::to_string(type_.particle_count()));
  }
  const std::vector<int> nuclei = type_.nucleus_slots();
  std::vector<bool> is_nucleus(static_cast<std::size_t>(realized_.size() + 1), false);
  for (int q : nuclei) is_nucleus[static_cast<std::size_t>(q)] = true;
  for (int p = 1; p <= realized_.size(); ++p) {
    if (is_nucleus[static_cast<std::size_t>(p)]) {
      if (!is_nucleus[static_cast<std::size_t>(realized_(p))]) {
        fail(ErrorCode::invalid_argument,
             "nucleus slot " + std::to_string(p) + " maps to an electron slot");
      }
    } else if (realized_(p) != p) {
      fail(ErrorCode::invalid_argument,
           "electron slot " + std::to_string(p) + " is not fixed");
    }
  }
}

FElement FElement::from_team(MoleculeType type, const Perm& team) {
  if (team.size() != type.arity()) {
    fail(ErrorCode::invalid_argument, "team size must equal the number of nuclei");
  }
  const std::vector<int> nuclei = type.nucleus_slots();
  std::vector<int> images(static_cast<std::size_t>(type.particle_count()));
  std::iota(images.begin(), images.end(), 1);
  for (int a = 1; a <= team.size(); ++a) {
    images[static_cast<std::size_t>(nuclei[static_cast<std::size_t>(a - 1)] - 1)] =
        nuclei[static_cast<std::size_t>(team(a) - 1)];
  }
  return FElement(std::move(type), Perm(std::move(images)));
}

Perm FElement::team_action() const {
  const std::vector<int> nuclei = type_.nucleus_slots();
  std::vector<int> images;
  images.reserve(nuclei.size());
  for (int q : nuclei) {
    const int target = realized_(q);
    const auto it = std::lower_bound(nuclei.begin(), nuclei.end(), target);
    images.push_back(static_cast<int>(it - nuclei.begin()) + 1);
  }
  return Perm(std::move(images));
}

std::string FElement::str() const {
  return type_.str() + " " + realized_.str();
}

FElement f_unit() { return FElement::from_team(master_unit(1), Perm::identity(1)); }

FElement f_compose(const FElement& tau, const std::vector<FElement>& sigmas) {
  const int k = tau.type().arity();
  if (static_cast<int>(sigmas.size()) != k) {
    fail(ErrorCode::invalid_argument, "composition needs one part per nucleus");
  }
  std::vector<MoleculeType> part_types;
  std::vector<Perm> part_teams;
  part_types.reserve(sigmas.size());
  part_teams.reserve(sigmas.size());
  for (const FElement& s : sigmas) {
    part_types.push_back(s.type());
    part_teams.push_back(s.team_action());
  }
  MoleculeType composed = master_compose(tau.type(), part_types);
  Perm team = sym_compose(tau.team_action(), part_teams);
  return FElement::from_team(std::move(composed), team);
}

BruhatElement small_unit(int d) { return minimal_element(d, d); }

BruhatElement small_compose(const BruhatElement& b0,
                            const std::vector<BruhatElement>& parts) {
  const int d = b0.d();
  if (b0.n() % d != 0) {
    fail(ErrorCode::invalid_argument, "small operad element needs n divisible by d");
  }
  const int arity = b0.n() / d;
  if (static_cast<int>(parts.size()) != arity) {
    fail(ErrorCode::invalid_argument,
         "composition needs " + std::to_string(arity) + " parts");
  }
  BruhatElement acc = b0;
  int placed = 0;  // total arity already substituted
  for (int i = 0; i < arity; ++i) {
    const BruhatElement& part = parts[static_cast<std::size_t>(i)];
    if (part.d() != d || part.n() % d != 0) {
      fail(ErrorCode::invalid_argument, "part " + std::to_string(i + 1) +
                                            " does not live in the d=" +
                                            std::to_string(d) + " operad");
    }
    acc = insert(acc, part, d * placed);
    placed += part.n() / d;
  }
  return acc;
}

BigElement::BigElement(BruhatElement bruhat, MoleculeType type)
    : bruhat_(std::move(bruhat)), type_(std::move(type)) {
  if (type_.d() != bruhat_.d()) {
    fail(ErrorCode::invalid_argument, "molecule width must equal d");
  }
  if (type_.particle_count() != bruhat_.n()) {
    fail(ErrorCode::invalid_argument,
         "molecule size " + std::to_string(type_.particle_count()) +
             " does not match ground set size " + std::to_string(bruhat_.n()));
  }
}

std::string BigElement::str() const {
  return type_.str() + " " + bruhat_.inv().str();
}

BigElement big_unit(int d) { return BigElement(small_unit(d), master_unit(d)); }

BigElement big_compose(const BigElement& a0, const std::vector<BigElement>& parts) {
  const int arity = a0.arity();
  if (static_cast<int>(parts.size()) != arity) {
    fail(ErrorCode::invalid_argument,
         "composition needs " + std::to_string(arity) + " parts");
  }
  const int d = a0.d();
  BruhatElement acc = a0.bruhat();
  // offset of nucleus i after substituting the first i-1 parts: the electrons
  // k_0..k_{i-1} plus the expanded widths m'_1..m'_{i-1}
  int electron_prefix = 0;
  int expanded_prefix = 0;
  std::vector<MoleculeType> part_types;
  part_types.reserve(parts.size());
  for (int i = 0; i < arity; ++i) {
    const BigElement& part = parts[static_cast<std::size_t>(i)];
    if (part.d() != d) fail(ErrorCode::invalid_argument, "parts must share d");
    electron_prefix += a0.type().electrons()[static_cast<std::size_t>(i)];
    acc = insert(acc, part.bruhat(), electron_prefix + expanded_prefix);
    expanded_prefix += part.m();
    part_types.push_back(part.type());
  }
  return BigElement(std::move(acc), master_compose(a0.type(), part_types));
}

}  // namespace hbo
