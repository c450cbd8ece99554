#include "hh/linear_system.hpp"

#include <algorithm>
#include <sstream>

namespace hh {

namespace {
constexpr i64 kMaxDegree = 10000;
}

LinearSystem::LinearSystem(i64 degree, std::vector<int> mults) : degree_(degree), mults_(std::move(mults)) {
  if (degree_ < 0) throw std::invalid_argument("LinearSystem: negative degree");
  if (degree_ > kMaxDegree) throw std::invalid_argument("LinearSystem: degree exceeds 64-bit safe range");
  for (int m : mults_) {
    if (m < 0) throw std::invalid_argument("LinearSystem: negative multiplicity");
  }
  std::erase(mults_, 0);
  std::sort(mults_.begin(), mults_.end(), std::greater<int>());
}

i64 LinearSystem::conditions() const {
  i64 total = 0;
  for (int m : mults_) total += tri(m);
  return total;
}

i64 LinearSystem::virtual_dimension() const { return binom(degree_ + 2, 2) - conditions() - 1; }

i64 LinearSystem::expected_dimension() const { return std::max<i64>(virtual_dimension(), -1); }

LinearSystem LinearSystem::padded_with_simple_points() const {
  const i64 extra = std::max<i64>(virtual_dimension() + 1, 0);
  if (extra == 0) return *this;
  return with_extra_points(1, static_cast<int>(extra));
}

LinearSystem LinearSystem::with_extra_points(int m, int count) const {
  std::vector<int> ms = mults_;
  ms.insert(ms.end(), static_cast<std::size_t>(count), m);
  return LinearSystem(degree_, std::move(ms));
}

std::vector<std::pair<int, int>> LinearSystem::groups() const {
  std::vector<std::pair<int, int>> g;
  for (int m : mults_) {
    if (!g.empty() && g.back().first == m) {
      ++g.back().second;
    } else {
      g.emplace_back(m, 1);
    }
  }
  return g;
}

u64 LinearSystem::stable_hash() const {
  u64 h = splitmix64(0x4c696e53ULL ^ static_cast<u64>(degree_));
  for (int m : mults_) h = hash_combine(h, static_cast<u64>(m));
  return h;
}

bool LinearSystem::operator<(const LinearSystem& o) const {
  if (degree_ != o.degree_) return degree_ < o.degree_;
  return mults_ < o.mults_;
}

std::string LinearSystem::to_string() const {
  std::ostringstream os;
  os << "L" << degree_ << "(";
  for (const auto& [m, k] : groups()) {
    if (os.str().back() != '(') os << ",";
    os << m;
    if (k > 1) os << "^" << k;
  }
  os << ")";
  return os.str();
}

DimensionReport make_dimension_report(const LinearSystem& sys) {
  DimensionReport r;
  r.virtual_dim = sys.virtual_dimension();
  r.expected_dim = sys.expected_dimension();
  return r;
}

}  // namespace hh
