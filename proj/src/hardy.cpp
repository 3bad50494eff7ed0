#include "vilenkin/hardy.hpp"

#include <charconv>

namespace vilenkin {

CounterexampleSpec::CounterexampleSpec(std::vector<int> alphas_in, RadixSystem sys_in)
    : alphas(std::move(alphas_in)), sys(std::move(sys_in)) {
  if (alphas.empty()) throw Error(ErrorCode::invalid_argument, "counterexample needs at least one alpha");
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (alphas[k] < 1) throw Error(ErrorCode::invalid_argument, "alphas must be positive");
    if (k > 0 && alphas[k] <= alphas[k - 1]) throw Error(ErrorCode::invalid_argument, "alphas must be strictly increasing");
  }
  if (alphas.back() + 1 > sys.depth()) {
    throw Error(ErrorCode::depth_insufficient, "alpha_K + 1 = " + std::to_string(alphas.back() + 1) +
                                                   " exceeds depth " + std::to_string(sys.depth()));
  }
}

CounterexampleSpec CounterexampleSpec::power_rule(int power, int terms, RadixSystem sys) {
  if (power < 1) throw Error(ErrorCode::invalid_argument, "power rule needs power >= 1");
  auto alphas = parse_alphas("", "k" + std::to_string(power), terms);
  return CounterexampleSpec(std::move(alphas), std::move(sys));
}

std::vector<int> CounterexampleSpec::parse_alphas(const std::string& list, const std::string& rule, int terms) {
  auto parse_int = [](std::string_view text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
      throw Error(ErrorCode::parse_error, "bad integer '" + std::string(text) + "'");
    }
    return value;
  };
  std::vector<int> alphas;
  if (!list.empty()) {
    std::string_view rest = list;
    for (;;) {
      auto comma = rest.find(',');
      alphas.push_back(parse_int(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return alphas;
  }
  if (rule.size() < 2 || rule.front() != 'k') throw Error(ErrorCode::parse_error, "alpha rule must look like k4");
  if (terms < 1) throw Error(ErrorCode::invalid_argument, "alpha rule needs --terms >= 1");
  const int power = parse_int(std::string_view(rule).substr(1));
  for (int k = 1; k <= terms; ++k) {
    long long a = 1;
    for (int p = 0; p < power; ++p) a *= k;
    if (a > 64) throw Error(ErrorCode::depth_insufficient, "alpha " + std::to_string(a) + " is too large");
    alphas.push_back(static_cast<int>(a));
  }
  return alphas;
}

double CounterexampleSpec::summability() const {
  double total = 0;
  for (int a : alphas) total += 1.0 / std::sqrt(static_cast<double>(a));
  return total;
}

int CounterexampleSpec::block_of(std::uint64_t j) const {
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (j >= sys.product(alphas[k]) && j < sys.product(alphas[k] + 1)) return static_cast<int>(k);
  }
  return -1;
}

CounterexampleSpec CounterexampleSpec::truncated(int terms) const {
  if (terms < 1 || terms > this->terms()) throw Error(ErrorCode::out_of_range, "terms " + std::to_string(terms));
  return CounterexampleSpec(std::vector<int>(alphas.begin(), alphas.begin() + terms), sys);
}

}  // namespace vilenkin
