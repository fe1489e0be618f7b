#include "aperiodic/pointset.hpp"

#include <array>

#include "aperiodic/constants.hpp"
#include "aperiodic/error.hpp"

namespace aperiodic {

SubstitutionRule::SubstitutionRule(std::map<char, Word> images,
                                   std::map<char, double> lengths)
    : images_(std::move(images)), lengths_(std::move(lengths)) {
  if (images_.empty()) throw InputError("substitution rule has no letters");
  for (const auto& [letter, image] : images_) {
    if (image.empty()) {
      throw InputError(std::string("image of letter '") + letter + "' is empty");
    }
    for (char c : image) {
      if (!images_.contains(c)) {
        throw InputError(std::string("image of '") + letter +
                         "' uses unknown letter '" + c + "'");
      }
    }
    const auto len = lengths_.find(letter);
    if (len == lengths_.end() || !(len->second > 0.0)) {
      throw InputError(std::string("letter '") + letter +
                       "' needs a positive tile length");
    }
  }
  for (const auto& [letter, len] : lengths_) {
    if (!images_.contains(letter)) {
      throw InputError(std::string("length given for unknown letter '") +
                       letter + "'");
    }
  }
}

SubstitutionRule SubstitutionRule::fibonacci() {
  return SubstitutionRule({{'l', "ls"}, {'s', "l"}}, {{'l', kGolden}, {'s', 1.0}});
}

const Word& SubstitutionRule::image(char letter) const {
  const auto it = images_.find(letter);
  if (it == images_.end()) {
    throw InputError(std::string("unknown letter '") + letter + "'");
  }
  return it->second;
}

double SubstitutionRule::length(char letter) const {
  const auto it = lengths_.find(letter);
  if (it == lengths_.end()) {
    throw InputError(std::string("unknown letter '") + letter + "'");
  }
  return it->second;
}

std::vector<char> SubstitutionRule::alphabet() const {
  std::vector<char> out;
  for (const auto& [letter, image] : images_) out.push_back(letter);
  return out;
}

Word substitute(std::string_view word, const SubstitutionRule& rule,
                unsigned iterations) {
  for (char c : word) {
    if (!rule.contains(c)) {
      throw InputError(std::string("unknown letter '") + c + "' in word");
    }
  }
  Word current(word);
  for (unsigned it = 0; it < iterations; ++it) {
    Word next;
    for (char c : current) next += rule.image(c);
    current = std::move(next);
  }
  return current;
}

namespace {

// Letter counts relative to an origin; the position is evaluated as
// origin + sum(count * length) in alphabet order and extended precision,
// rounded once, so that equal counts give bit-identical coordinates however
// the tiles were reached (and the same value model_set computes).
class TileCursor {
 public:
  explicit TileCursor(const SubstitutionRule& rule) {
    for (char c : rule.alphabet()) {
      slot_[static_cast<unsigned char>(c)] = static_cast<int>(letters_.size());
      letters_.push_back(c);
      lengths_.push_back(rule.length(c));
    }
    counts_.assign(letters_.size(), 0);
  }

  void advance(char c, std::int64_t direction) {
    const int slot = slot_[static_cast<unsigned char>(c)];
    if (slot < 0) throw InputError(std::string("unknown letter '") + c + "'");
    counts_[static_cast<std::size_t>(slot)] += direction;
  }

  double position(double origin) const {
    long double offset = 0.0L;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      offset += static_cast<long double>(counts_[i]) * lengths_[i];
    }
    return static_cast<double>(origin + offset);
  }

 private:
  std::array<int, 256> slot_ = [] {
    std::array<int, 256> a{};
    a.fill(-1);
    return a;
  }();
  std::vector<char> letters_;
  std::vector<double> lengths_;
  std::vector<std::int64_t> counts_;
};

}  // namespace

PointSet word_to_points(std::string_view word, const SubstitutionRule& rule,
                        double origin) {
  if (word.empty()) throw InputError("word_to_points: empty word");
  TileCursor cursor(rule);
  std::vector<double> points;
  points.reserve(word.size());
  for (char c : word) {
    points.push_back(cursor.position(origin));
    cursor.advance(c, +1);
  }
  return PointSet(std::move(points), {origin, cursor.position(origin)});
}

PointSet fibonacci_substitution_points(unsigned iterations) {
  const auto rule = SubstitutionRule::fibonacci();
  const Word half = substitute("l", rule, iterations);

  // Left copy: walk from the cut towards -infinity, consuming the word from
  // its last letter.
  std::vector<double> left;
  left.reserve(half.size());
  TileCursor back(rule);
  for (auto it = half.rbegin(); it != half.rend(); ++it) {
    back.advance(*it, -1);
    left.push_back(back.position(0.0));
  }

  std::vector<double> points(left.rbegin(), left.rend());
  points.reserve(2 * half.size() + 1);
  TileCursor forward(rule);
  points.push_back(0.0);
  for (char c : half) {
    forward.advance(c, +1);
    points.push_back(forward.position(0.0));
  }
  const double extent = points.back();
  return PointSet(std::move(points), {-extent, extent});
}

}  // namespace aperiodic
