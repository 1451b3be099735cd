#include "moore/fp_group/reidemeister_schreier.hpp"

#include <deque>

#include "moore/fp_group/errors.hpp"

namespace moore {

SchreierKernel::SchreierKernel(Presentation source, FiniteHomomorphism onto)
    : source_(std::move(source)), onto_(std::move(onto)) {
  source_.validate();
  if (onto_.images.size() != source_.generators.size())
    throw DomainError("homomorphism has the wrong number of generator images");
  if (!onto_.preserves_relators(source_))
    throw DomainError("generator images do not satisfy the relators");
  const auto& t = *onto_.target;
  const std::size_t n = t.order(), k = source_.generators.size();

  std::vector<char> seen(n, 0);
  std::vector<char> tree(n * k, 0);  // (coset, gen) whose Schreier generator is trivial
  reps_.assign(n, {});
  seen[0] = 1;
  std::deque<Index> queue{0};
  while (!queue.empty()) {
    Index c = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < k; ++g)
      for (int sign : {1, -1}) {
        Index img = onto_.images[g];
        Index d = t.mul(c, sign > 0 ? img : t.inverse(img));
        if (seen[d]) continue;
        seen[d] = 1;
        reps_[d] = reps_[c];
        reps_[d].push_back(sign * gen_letter(static_cast<int>(g)));
        tree[(sign > 0 ? c : d) * k + g] = 1;
        queue.push_back(d);
      }
  }
  for (char s : seen)
    if (!s) throw DomainError("homomorphism is not onto; Reidemeister-Schreier needs a surjection");

  index_.assign(n * k, -1);
  for (Index c = 0; c < n; ++c)
    for (std::size_t g = 0; g < k; ++g) {
      if (tree[c * k + g]) continue;
      int id = static_cast<int>(gen_words_.size());
      index_[c * k + g] = id;
      Index d = t.mul(c, onto_.images[g]);
      Word w = reps_[c];
      w.push_back(gen_letter(static_cast<int>(g)));
      auto back = inverse_word(reps_[d]);
      w.insert(w.end(), back.begin(), back.end());
      gen_words_.push_back(free_reduce(w));
      kernel_.generators.push_back("s" + std::to_string(c) + "_" + source_.generators[g]);
    }
  for (Index c = 0; c < n; ++c)
    for (const auto& r : source_.relators) kernel_.relators.push_back(rewrite(r, c));
}

Word SchreierKernel::rewrite(const Word& w, Index start) const {
  const auto& t = *onto_.target;
  Word out;
  Index c = start;
  for (Letter l : w) {
    int g = letter_gen(l);
    if (g < 0 || g >= static_cast<int>(source_.generators.size()))
      throw DomainError("letter outside the source alphabet");
    if (l > 0) {
      int s = schreier_index(c, g);
      if (s >= 0) out.push_back(gen_letter(s));
      c = t.mul(c, onto_.images[g]);
    } else {
      Index d = t.mul(c, t.inverse(onto_.images[g]));
      int s = schreier_index(d, g);
      if (s >= 0) out.push_back(-gen_letter(s));
      c = d;
    }
  }
  if (c != start) throw DomainError("rewritten word does not lie in the kernel");
  return free_reduce(out);
}

std::vector<long long> SchreierKernel::rewrite_abelian(const Word& w, Index start) const {
  std::vector<long long> v(kernel_.generators.size(), 0);
  for (Letter l : rewrite(w, start)) v[letter_gen(l)] += l > 0 ? 1 : -1;
  return v;
}

Presentation reidemeister_schreier(const Presentation& pres, const FiniteHomomorphism& onto) {
  return SchreierKernel(pres, onto).kernel();
}

}  // namespace moore
