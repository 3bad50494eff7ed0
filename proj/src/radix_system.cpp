#include "vilenkin/radix_system.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace vilenkin {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_radix: return "invalid-radix";
    case ErrorCode::depth_too_large: return "depth-too-large";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::system_mismatch: return "system-mismatch";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::depth_insufficient: return "depth-insufficient";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

RadixSystem::RadixSystem(std::vector<int> radices, int depth) {
  if (depth < 1) throw Error(ErrorCode::invalid_argument, "depth must be >= 1");
  if (radices.empty()) throw Error(ErrorCode::invalid_radix, "empty radix list");
  for (int m : radices) {
    if (m < 2) throw Error(ErrorCode::invalid_radix, "radix " + std::to_string(m) + " < 2");
  }
  radices_.reserve(static_cast<std::size_t>(depth));
  for (int k = 0; k < depth; ++k) radices_.push_back(radices[static_cast<std::size_t>(k) % radices.size()]);

  products_.assign(1, 1);
  for (int m : radices_) {
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(products_.back(), static_cast<std::uint64_t>(m), &next)) {
      throw Error(ErrorCode::depth_too_large, "M_N overflows 64 bits at depth " + std::to_string(depth));
    }
    products_.push_back(next);
  }
  lambda_ = *std::max_element(radices_.begin(), radices_.end());
}

RadixSystem::RadixSystem(std::vector<int> radices)
    : RadixSystem(radices, static_cast<int>(radices.size())) {}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::parse_error, "bad radix spec '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

RadixSystem RadixSystem::parse(std::string_view spec, int depth) {
  if (auto caret = spec.find('^'); caret != std::string_view::npos) {
    int radix = parse_int(spec.substr(0, caret), spec);
    int parsed_depth = parse_int(spec.substr(caret + 1), spec);
    return RadixSystem({radix}, depth > 0 ? depth : parsed_depth);
  }
  std::vector<int> radices;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto comma = spec.find(',', start);
    if (comma == std::string_view::npos) comma = spec.size();
    radices.push_back(parse_int(spec.substr(start, comma - start), spec));
    start = comma + 1;
  }
  int n = depth > 0 ? depth : static_cast<int>(radices.size());
  return RadixSystem(std::move(radices), n);
}

RadixSystem RadixSystem::prefix(int depth) const {
  if (depth < 1 || depth > this->depth()) {
    throw Error(ErrorCode::out_of_range, "prefix depth " + std::to_string(depth));
  }
  return RadixSystem(std::vector<int>(radices_.begin(), radices_.begin() + depth), depth);
}

std::string RadixSystem::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < radices_.size(); ++k) out << (k ? "," : "") << radices_[k];
  return out.str();
}

VilenkinIndex decompose(std::uint64_t n, const RadixSystem& sys) {
  if (n >= sys.size()) {
    throw Error(ErrorCode::out_of_range, "index " + std::to_string(n) + " >= M_N = " + std::to_string(sys.size()));
  }
  VilenkinIndex idx;
  idx.value = n;
  idx.digits.resize(static_cast<std::size_t>(sys.depth()));
  for (int j = 0; j < sys.depth(); ++j) {
    const auto m = static_cast<std::uint64_t>(sys.radix(j));
    idx.digits[static_cast<std::size_t>(j)] = static_cast<int>(n % m);
    if (n % m != 0) idx.order = j;
    n /= m;
  }
  return idx;
}

std::uint64_t compose(const std::vector<int>& digits, const RadixSystem& sys) {
  if (digits.size() != static_cast<std::size_t>(sys.depth())) {
    throw Error(ErrorCode::system_mismatch, "digit count differs from depth");
  }
  std::uint64_t n = 0;
  for (int j = 0; j < sys.depth(); ++j) {
    int d = digits[static_cast<std::size_t>(j)];
    if (d < 0 || d >= sys.radix(j)) throw Error(ErrorCode::out_of_range, "digit out of range at level " + std::to_string(j));
    n += static_cast<std::uint64_t>(d) * sys.product(j);
  }
  return n;
}

CellIndex make_cell(std::uint64_t t, const RadixSystem& sys) {
  auto idx = decompose(t, sys);
  return CellIndex{t, std::move(idx.digits)};
}

CellIndex make_cell(const std::vector<int>& coords, const RadixSystem& sys) {
  return CellIndex{compose(coords, sys), coords};
}

namespace {

void check_cell(const CellIndex& x, const RadixSystem& sys) {
  if (x.coords.size() != static_cast<std::size_t>(sys.depth()) || x.t >= sys.size()) {
    throw Error(ErrorCode::system_mismatch, "cell does not belong to system " + sys.to_string());
  }
}

}  // namespace

CellIndex group_add(const CellIndex& x, const CellIndex& y, const RadixSystem& sys) {
  check_cell(x, sys);
  check_cell(y, sys);
  std::vector<int> coords(x.coords.size());
  for (std::size_t j = 0; j < coords.size(); ++j) {
    coords[j] = (x.coords[j] + y.coords[j]) % sys.radix(static_cast<int>(j));
  }
  return make_cell(coords, sys);
}

CellIndex group_neg(const CellIndex& x, const RadixSystem& sys) {
  check_cell(x, sys);
  std::vector<int> coords(x.coords.size());
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const int m = sys.radix(static_cast<int>(j));
    coords[j] = (m - x.coords[j]) % m;
  }
  return make_cell(coords, sys);
}

std::uint64_t group_add(std::uint64_t x, std::uint64_t y, const RadixSystem& sys) {
  if (x >= sys.size() || y >= sys.size()) throw Error(ErrorCode::out_of_range, "cell index");
  std::uint64_t out = 0;
  for (int j = 0; j < sys.depth(); ++j) {
    const auto m = static_cast<std::uint64_t>(sys.radix(j));
    out += ((x % m + y % m) % m) * sys.product(j);
    x /= m;
    y /= m;
  }
  return out;
}

std::uint64_t group_neg(std::uint64_t x, const RadixSystem& sys) {
  if (x >= sys.size()) throw Error(ErrorCode::out_of_range, "cell index");
  std::uint64_t out = 0;
  for (int j = 0; j < sys.depth(); ++j) {
    const auto m = static_cast<std::uint64_t>(sys.radix(j));
    out += ((m - x % m) % m) * sys.product(j);
    x /= m;
  }
  return out;
}

double cell_measure(int rank, const RadixSystem& sys) {
  if (rank < 0 || rank > sys.depth()) throw Error(ErrorCode::out_of_range, "rank " + std::to_string(rank));
  return 1.0 / static_cast<double>(sys.product(rank));
}

int leading_zero_levels(std::uint64_t t, const RadixSystem& sys) {
  int j = 0;
  while (j < sys.depth() && t % static_cast<std::uint64_t>(sys.radix(j)) == 0) {
    t /= static_cast<std::uint64_t>(sys.radix(j));
    ++j;
  }
  return j;
}

void require_same_system(const RadixSystem& a, const RadixSystem& b) {
  if (!(a == b)) throw Error(ErrorCode::system_mismatch, a.to_string() + " vs " + b.to_string());
}

}  // namespace vilenkin
