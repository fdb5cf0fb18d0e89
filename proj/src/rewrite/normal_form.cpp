#include <algorithm>
#include <unordered_map>

#include "ncdoc/rewrite/relation_set.hpp"

namespace ncdoc::rewrite {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (auto g : w) h = h * 1000003u ^ g.hash();
    return h;
  }
};

class Reducer {
 public:
  explicit Reducer(const RelationSet& R) : R_(R) {}

  NCPoly reduce(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
      Word canon;
      canon.reserve(w.size());
      for (auto g : w) canon.push_back(R_.canonical(g));
      out += word(canon) * c;
    }
    return out;
  }

 private:
  const NCPoly& word(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) {
      if (!it->second) {
        throw NonTerminatingRewrite(R_.name() + ": rewrite cycle through " + ncalg::word_to_string(w));
      }
      return *it->second;
    }
    memo_.emplace(w, std::nullopt);
    NCPoly value = expand(w);
    auto& slot = memo_[w];
    slot = std::move(value);
    return *slot;
  }

  void step() {
    if (++steps_ > R_.step_budget()) {
      throw NonTerminatingRewrite(R_.name() + ": rewrite step budget exhausted");
    }
  }

  NCPoly expand(const Word& w) {
    std::vector<int> blocks(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) blocks[i] = R_.block_of(w[i]);

    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const int bl = blocks[i], br = blocks[i + 1];
      const bool swap = bl > br || (bl == br && R_.commutative_block(bl) && w[i + 1] < w[i]);
      if (!swap) continue;
      step();
      // a b = b a - [b, a] with b the earlier generator
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      NCPoly out = word(swapped);
      NCPoly correction = (bl == br) ? NCPoly() : R_.bracket_rule(w[i + 1], w[i]);
      if (!correction.is_zero()) {
        Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        Word right(w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        out -= reduce(NCPoly::word(std::move(left)) * correction * NCPoly::word(std::move(right)));
      }
      return out;
    }

    if (auto reduced = apply_reduction(w, blocks)) return *reduced;
    return NCPoly::word(w);
  }

  std::optional<NCPoly> apply_reduction(const Word& w, const std::vector<int>& blocks) {
    for (const auto& red : R_.reductions()) {
      const int b = R_.block_of(red.lhs.front());
      std::size_t start = 0;
      while (start < w.size()) {
        if (blocks[start] != b) {
          ++start;
          continue;
        }
        std::size_t end = start;
        while (end < w.size() && blocks[end] == b) ++end;
        // the run [start, end) is sorted, so multiset inclusion is a merge
        std::vector<bool> used(end - start, false);
        std::size_t k = 0;
        for (std::size_t pos = start; pos < end && k < red.lhs.size(); ++pos) {
          if (w[pos] == red.lhs[k]) {
            used[pos - start] = true;
            ++k;
          }
        }
        if (k == red.lhs.size()) {
          step();
          Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
          Word rest;
          for (std::size_t pos = start; pos < end; ++pos)
            if (!used[pos - start]) rest.push_back(w[pos]);
          rest.insert(rest.end(), w.begin() + static_cast<std::ptrdiff_t>(end), w.end());
          return reduce(NCPoly::word(std::move(left)) * red.rhs * NCPoly::word(std::move(rest)));
        }
        start = end;
      }
    }
    return std::nullopt;
  }

  const RelationSet& R_;
  std::unordered_map<Word, std::optional<NCPoly>, WordHash> memo_;
  std::size_t steps_ = 0;
};

}  // namespace

NCPoly normal_form(const NCPoly& p, const RelationSet& R) { return Reducer(R).reduce(p); }

}  // namespace ncdoc::rewrite
