#include "uhecke/weyl.hpp"

#include <cassert>
#include <cstdlib>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace uhecke {

SignedPermutation SignedPermutation::identity(int r) {
  SignedPermutation w;
  w.rank = r;
  w.img.resize(r);
  for (int i = 0; i < r; ++i) w.img[i] = i + 1;
  return w;
}

SignedPermutation SignedPermutation::negate_coord(int r, int i) {
  assert(i >= 1 && i <= r);
  SignedPermutation w = identity(r);
  w.img[i - 1] = -i;
  return w;
}

SignedPermutation SignedPermutation::adjacent_swap(int r, int i) {
  assert(i >= 1 && i < r);
  SignedPermutation w = identity(r);
  std::swap(w.img[i - 1], w.img[i]);
  return w;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation w;
  w.rank = rank;
  w.img.resize(rank);
  for (int i = 0; i < rank; ++i) {
    int t = img[i];
    if (t > 0)
      w.img[t - 1] = i + 1;
    else
      w.img[-t - 1] = -(i + 1);
  }
  return w;
}

int SignedPermutation::negatives() const {
  int n = 0;
  for (int t : img)
    if (t < 0) ++n;
  return n;
}

std::string SignedPermutation::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rank; ++i) {
    if (i) os << ", ";
    os << img[i];
  }
  os << "]";
  return os.str();
}

SignedPermutation compose(const SignedPermutation& a,
                          const SignedPermutation& b) {
  if (a.rank != b.rank)
    throw std::invalid_argument("compose: rank mismatch");
  SignedPermutation w;
  w.rank = a.rank;
  w.img.resize(a.rank);
  for (int i = 0; i < a.rank; ++i) {
    int t = b.img[i];
    int u = a.img[std::abs(t) - 1];
    w.img[i] = t > 0 ? u : -u;
  }
  return w;
}

SignedPermutation generator(int r, GenIndex g) {
  if (g == 0) return SignedPermutation::negate_coord(r, 1);
  return SignedPermutation::adjacent_swap(r, g);
}

int num_generators(int r) { return r; }

int length(const SignedPermutation& w) {
  int inv = 0, neg = 0, nsp = 0;
  for (int i = 0; i < w.rank; ++i) {
    if (w.img[i] < 0) ++neg;
    for (int j = i + 1; j < w.rank; ++j) {
      if (w.img[i] > w.img[j]) ++inv;
      if (w.img[i] + w.img[j] < 0) ++nsp;
    }
  }
  return inv + neg + nsp;
}

std::vector<WeylElement> enumerate_group(int r, int bound) {
  if (r < 1 || r > bound)
    throw std::domain_error("enumerate_group: rank outside configured bound");
  std::map<std::vector<int>, size_t> seen;
  std::vector<WeylElement> out;
  std::queue<size_t> todo;
  WeylElement e{SignedPermutation::identity(r), {}};
  seen[e.perm.img] = 0;
  out.push_back(e);
  todo.push(0);
  while (!todo.empty()) {
    size_t cur = todo.front();
    todo.pop();
    for (GenIndex g = 0; g < num_generators(r); ++g) {
      SignedPermutation next = compose(out[cur].perm, generator(r, g));
      if (seen.count(next.img)) continue;
      WeylElement we;
      we.perm = next;
      we.reduced_word = out[cur].reduced_word;
      we.reduced_word.push_back(g);
      seen[next.img] = out.size();
      todo.push(out.size());
      out.push_back(std::move(we));
    }
  }
  return out;
}

std::vector<std::vector<SignedPermutation>> parabolic_double_cosets(int r) {
  // The S_r x S_r orbit invariant on W_r is the number of negative entries:
  // S_r (w_1...w_i) S_r consists exactly of the elements with i negatives.
  auto all = enumerate_group(r);
  std::vector<std::vector<SignedPermutation>> blocks(r + 1);
  for (const auto& we : all) blocks[we.perm.negatives()].push_back(we.perm);
  return blocks;
}

SignedPermutation evaluate_word(int r, const std::vector<GenIndex>& word) {
  SignedPermutation w = SignedPermutation::identity(r);
  for (GenIndex g : word) w = compose(w, generator(r, g));
  return w;
}

}  // namespace uhecke
