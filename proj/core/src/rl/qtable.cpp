#include "btrl/rl/qtable.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace btrl::rl {
namespace {

constexpr std::string_view kMagic = "btrl-qtable 1";

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error("qtable snapshot: bad number '" +
                             std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::size_t StateHash::operator()(const DiscreteState& s) const noexcept {
  // FNV-1a over the feature words.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int feature : s) {
    auto word = static_cast<std::uint64_t>(static_cast<std::uint32_t>(feature));
    for (int i = 0; i < 4; ++i) {
      h ^= (word >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  return static_cast<std::size_t>(h);
}

QTable::QTable(int n_actions) : n_actions_(n_actions) {
  if (n_actions < 1) {
    throw std::invalid_argument("qtable needs at least one action");
  }
}

void QTable::check_action(ActionIndex a) const {
  if (a < 0 || a >= n_actions_) {
    throw std::out_of_range("qtable action index out of range");
  }
}

const std::vector<double>* QTable::row(const DiscreteState& s) const {
  auto it = rows_.find(s);
  return it == rows_.end() ? nullptr : &it->second;
}

double QTable::value(const DiscreteState& s, ActionIndex a) const {
  check_action(a);
  const auto* r = row(s);
  return r == nullptr ? 0.0 : (*r)[static_cast<std::size_t>(a)];
}

void QTable::set(const DiscreteState& s, ActionIndex a, double v) {
  check_action(a);
  if (!std::isfinite(v)) {
    throw std::invalid_argument("qtable values must be finite");
  }
  auto it = rows_.find(s);
  if (it == rows_.end()) {
    it = rows_.emplace(s, std::vector<double>(n_actions_, 0.0)).first;
  }
  it->second[static_cast<std::size_t>(a)] = v;
}

double QTable::max_value(const DiscreteState& s) const {
  const auto* r = row(s);
  if (r == nullptr) return 0.0;
  return *std::max_element(r->begin(), r->end());
}

ActionIndex QTable::greedy_action(const DiscreteState& s) const {
  const auto* r = row(s);
  if (r == nullptr) return 0;
  return static_cast<ActionIndex>(
      std::max_element(r->begin(), r->end()) - r->begin());
}

std::vector<ActionIndex> QTable::argmax_set(const DiscreteState& s) const {
  std::vector<ActionIndex> best;
  const auto* r = row(s);
  if (r == nullptr) {
    best.resize(static_cast<std::size_t>(n_actions_));
    for (int a = 0; a < n_actions_; ++a) best[static_cast<std::size_t>(a)] = a;
    return best;
  }
  const double top = *std::max_element(r->begin(), r->end());
  for (int a = 0; a < n_actions_; ++a) {
    if ((*r)[static_cast<std::size_t>(a)] == top) best.push_back(a);
  }
  return best;
}

std::vector<std::pair<DiscreteState, std::vector<double>>> QTable::sorted_rows()
    const {
  std::vector<std::pair<DiscreteState, std::vector<double>>> out(rows_.begin(),
                                                                 rows_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void QTable::save(std::ostream& out) const {
  out << kMagic << '\n';
  out << "actions " << n_actions_ << '\n';
  for (const auto& [state, values] : sorted_rows()) {
    for (std::size_t i = 0; i < state.size(); ++i) {
      if (i > 0) out << ',';
      out << state[i];
    }
    for (double v : values) {
      out << ' ' << format_double(v);
    }
    out << '\n';
  }
}

QTable QTable::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMagic) {
    throw std::runtime_error("qtable snapshot: bad header");
  }
  if (!std::getline(in, line) || line.rfind("actions ", 0) != 0) {
    throw std::runtime_error("qtable snapshot: missing action count");
  }
  int n_actions = 0;
  {
    const std::string_view rest = std::string_view(line).substr(8);
    const auto [ptr, ec] =
        std::from_chars(rest.data(), rest.data() + rest.size(), n_actions);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
      throw std::runtime_error("qtable snapshot: bad action count");
    }
  }
  QTable table(n_actions);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto first_space = line.find(' ');
    if (first_space == std::string::npos) {
      throw std::runtime_error("qtable snapshot: malformed row");
    }
    DiscreteState state;
    {
      std::string_view features = std::string_view(line).substr(0, first_space);
      while (!features.empty()) {
        const auto comma = features.find(',');
        const std::string_view tok = features.substr(0, comma);
        int feature = 0;
        const auto [ptr, ec] =
            std::from_chars(tok.data(), tok.data() + tok.size(), feature);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
          throw std::runtime_error("qtable snapshot: bad state feature");
        }
        state.push_back(feature);
        features = comma == std::string_view::npos ? std::string_view{}
                                                   : features.substr(comma + 1);
      }
    }
    std::string_view values = std::string_view(line).substr(first_space + 1);
    int a = 0;
    while (!values.empty()) {
      const auto space = values.find(' ');
      if (a >= n_actions) {
        throw std::runtime_error("qtable snapshot: too many values in row");
      }
      table.set(state, a++, parse_double(values.substr(0, space)));
      values = space == std::string_view::npos ? std::string_view{}
                                               : values.substr(space + 1);
    }
    if (a != n_actions) {
      throw std::runtime_error("qtable snapshot: too few values in row");
    }
  }
  return table;
}

}  // namespace btrl::rl
