#include "rgflab/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

namespace rgflab {

namespace {

int parse_positive(std::string_view token, std::string_view context) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last || value < 1) {
    throw DomainError("invalid " + std::string(context) + " '" +
                      std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("RGFLAB_MAX_N")) {
    int value = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value >= 0) {
      limits.max_n = value;
    }
  }
  return limits;
}

void check_length(int n, const EnumerationLimits& limits) {
  if (n < 0) throw DomainError("length must be nonnegative, got " + std::to_string(n));
  if (n > limits.max_n) {
    throw ResourceLimitError("length " + std::to_string(n) +
                             " exceeds the enumeration ceiling " +
                             std::to_string(limits.max_n));
  }
}

Word::Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int x : letters_) {
    if (x < 1) throw DomainError("word letters must be positive");
  }
}

Word Word::parse(std::string_view text) {
  std::vector<int> letters;
  if (text.find('.') != std::string_view::npos) {
    for (auto token : split(text, '.')) letters.push_back(parse_positive(token, "letter"));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw DomainError("invalid word '" + std::string(text) + "'");
      }
      letters.push_back(c - '0');
    }
  }
  return Word(std::move(letters));
}

int Word::max() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

void Word::push_back(int letter) {
  if (letter < 1) throw DomainError("word letters must be positive");
  letters_.push_back(letter);
}

std::string Word::str() const {
  std::string out;
  const bool digits = max() <= 9;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!digits && i > 0) out += '.';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

bool is_rgf(const Word& w) {
  int running_max = 0;
  for (int x : w) {
    if (x > running_max + 1) return false;
    running_max = std::max(running_max, x);
  }
  return true;
}

void require_rgf(const Word& w, std::string_view what) {
  if (!is_rgf(w)) {
    throw DomainError(std::string(what) + " '" + w.str() + "' is not an RGF");
  }
}

Word standardize(const Word& w) {
  std::vector<int> values(w.begin(), w.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w) {
    out.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), x) -
                                   values.begin()) + 1);
  }
  return Word(std::move(out));
}

std::vector<std::size_t> left_to_right_maxima(const Word& w) {
  std::vector<std::size_t> out;
  int running_max = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > running_max) {
      out.push_back(i);
      running_max = w[i];
    }
  }
  return out;
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  int n = 0;
  std::size_t total = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw DomainError("set partition blocks must be nonempty");
    std::sort(block.begin(), block.end());
    n = std::max(n, block.back());
    total += block.size();
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& block : blocks_) {
    for (int x : block) {
      if (x < 1 || seen[static_cast<std::size_t>(x)]) {
        throw DomainError("blocks do not partition [n]");
      }
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
  if (total != static_cast<std::size_t>(n)) throw DomainError("blocks do not partition [n]");
  n_ = n;
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  if (text.empty()) return SetPartition();
  for (auto block_text : split(text, '/')) {
    std::vector<int> block;
    if (block_text.find(',') != std::string_view::npos) {
      for (auto token : split(block_text, ',')) block.push_back(parse_positive(token, "element"));
    } else {
      for (char c : block_text) {
        if (c < '1' || c > '9') {
          throw DomainError("invalid set partition '" + std::string(text) + "'");
        }
        block.push_back(c - '0');
      }
    }
    blocks.push_back(std::move(block));
  }
  return SetPartition(std::move(blocks));
}

std::string SetPartition::str() const {
  const bool digits = n_ <= 9;
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out += '/';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (!digits && i > 0) out += ',';
      out += std::to_string(blocks_[b][i]);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SetPartition& p) { return os << p.str(); }

Word partition_to_rgf(const SetPartition& sigma) {
  std::vector<int> letters(static_cast<std::size_t>(sigma.size()), 0);
  for (std::size_t j = 0; j < sigma.blocks().size(); ++j) {
    for (int i : sigma.blocks()[j]) letters[static_cast<std::size_t>(i - 1)] = static_cast<int>(j) + 1;
  }
  return Word(std::move(letters));
}

SetPartition rgf_to_partition(const Word& w) {
  require_rgf(w);
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(w.max()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    blocks[static_cast<std::size_t>(w[i] - 1)].push_back(static_cast<int>(i) + 1);
  }
  return SetPartition(std::move(blocks));
}

void for_each_rgf(int n, const WordVisitor& visit, const EnumerationLimits& limits) {
  check_length(n, limits);
  Word prefix;
  if (n == 0) {
    visit(prefix);
    return;
  }
  prefix.push_back(1);
  walk_rgf_tree(prefix, static_cast<std::size_t>(n), [](const Word&) { return true; }, visit);
}

std::vector<Word> enumerate_rgfs(int n, const EnumerationLimits& limits) {
  std::vector<Word> out;
  for_each_rgf(n, [&](const Word& w) { out.push_back(w); }, limits);
  return out;
}

std::vector<Word> rgf_prefixes(int n, int depth) {
  const int d = std::max(0, std::min(depth, n));
  return enumerate_rgfs(d, EnumerationLimits{std::max(d, 0)});
}

}  // namespace rgflab
