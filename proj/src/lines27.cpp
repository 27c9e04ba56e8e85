#include "cubsurf/lines27.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cubsurf/error.hpp"
#include "cubsurf/matrix.hpp"

namespace cubsurf {

bool GroupElt::valid() const {
  std::array<bool, kLetters> seen{};
  int prod = 1;
  for (std::size_t i = 0; i < kLetters; ++i) {
    if (sigma[i] < 0 || sigma[i] >= static_cast<int>(kLetters) || seen[sigma[i]]) return false;
    seen[sigma[i]] = true;
    if (t[i] != 1 && t[i] != -1) return false;
    prod *= t[i];
  }
  return prod == 1;
}

GroupElt compose(const GroupElt& g, const GroupElt& h) {
  GroupElt r;
  for (std::size_t j = 0; j < kLetters; ++j) {
    int k = g.sigma[h.sigma[j]];
    r.sigma[j] = k;
    r.t[k] = h.t[h.sigma[j]] * g.t[k];
  }
  return r;
}

GroupElt inverse(const GroupElt& g) {
  GroupElt r;
  for (std::size_t j = 0; j < kLetters; ++j) {
    r.sigma[g.sigma[j]] = static_cast<int>(j);
    r.t[j] = g.t[g.sigma[j]];
  }
  return r;
}

namespace {

void cycles_on(const GroupElt& g, const std::vector<int>& letters, FrobClass& out) {
  std::set<int> seen;
  for (int i : letters) {
    if (seen.count(i)) continue;
    int len = 0, prod = 1, j = i;
    while (!seen.count(j)) {
      seen.insert(j);
      ++len;
      prod *= g.t[g.sigma[j]];
      j = g.sigma[j];
    }
    out.emplace_back(len, prod);
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

FrobClass class_of(const GroupElt& g) {
  FrobClass c;
  cycles_on(g, {0, 1, 2, 3, 4}, c);
  return c;
}

std::vector<FrobClass> class_of(const GroupElt& g, const std::vector<std::vector<int>>& blocks) {
  std::vector<FrobClass> out;
  for (const auto& b : blocks) {
    for (int i : b)
      require(std::find(b.begin(), b.end(), g.sigma[i]) != b.end(), ErrorCode::invalid_argument,
              "element does not preserve the blocks");
    FrobClass c;
    cycles_on(g, b, c);
    out.push_back(c);
  }
  return out;
}

int total_sign(const FrobClass& c) {
  int s = 1;
  for (const auto& [len, sign] : c) s *= sign;
  return s;
}

std::string to_string(const FrobClass& c) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) os << ",";
    os << c[k].first << (c[k].second > 0 ? "+" : "-");
  }
  os << "]";
  return os.str();
}

GroupElt representative(const std::vector<FrobClass>& per_block, const std::vector<std::vector<int>>& blocks) {
  require(per_block.size() == blocks.size(), ErrorCode::invalid_argument, "class and block counts differ");
  GroupElt g;
  std::vector<bool> used(kLetters, false);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::size_t pos = 0;
    for (const auto& [len, sign] : per_block[b]) {
      require(pos + len <= blocks[b].size(), ErrorCode::invalid_argument, "class does not fit its block");
      for (int k = 0; k < len; ++k) {
        int from = blocks[b][pos + k], to = blocks[b][pos + (k + 1) % len];
        g.sigma[from] = to;
        used[from] = true;
      }
      g.t[blocks[b][pos]] = sign;
      pos += len;
    }
    require(pos == blocks[b].size(), ErrorCode::invalid_argument, "class does not fill its block");
  }
  for (bool u : used) require(u, ErrorCode::invalid_argument, "blocks do not cover the five letters");
  require(g.valid(), ErrorCode::invalid_argument, "class has odd total sign");
  return g;
}

GroupElt representative(const FrobClass& c) { return representative({c}, {{0, 1, 2, 3, 4}}); }

int Lines27::intersect(const PicVec& a, const PicVec& b) {
  int s = a[0] * b[0];
  for (std::size_t k = 1; k < 7; ++k) s -= a[k] * b[k];
  return s;
}

std::size_t Lines27::sign_label(const std::array<int, kLetters>& eps) const {
  for (std::size_t k = 0; k < 16; ++k)
    if (sign_vectors[k] == eps) return 11 + k;
  fail(ErrorCode::invalid_argument, "not an even sign vector");
}

std::string Lines27::name(std::size_t label) const {
  if (label == 0) return "L0";
  std::ostringstream os;
  if (label <= 10) {
    std::size_t i = (label - 1) / 2;
    os << "(" << i << "," << ((label - 1) % 2 ? "-" : "+") << ")";
    return os.str();
  }
  os << "[";
  for (int e : sign_vectors[label - 11]) os << (e > 0 ? "+" : "-");
  os << "]";
  return os.str();
}

const Lines27& Lines27::instance() {
  static const Lines27 model = [] {
    Lines27 m;
    auto vec = [](int l, std::initializer_list<std::pair<int, int>> es) {
      PicVec v{};
      v[0] = l;
      for (auto [j, c] : es) v[j] += c;
      return v;
    };
    m.pic[0] = vec(0, {{6, 1}});
    for (int i = 0; i < 5; ++i) {
      m.pic[pair_label(i, 1)] = vec(1, {{i + 1, -1}, {6, -1}});
      PicVec minus{};
      minus[0] = 2;
      for (int j = 1; j <= 6; ++j)
        if (j != i + 1) minus[j] = -1;
      m.pic[pair_label(i, -1)] = minus;
    }
    // the sixteen classes avoiding L0
    std::vector<PicVec> sixteen;
    for (int j = 1; j <= 5; ++j) sixteen.push_back(vec(0, {{j, 1}}));
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b) sixteen.push_back(vec(1, {{a, -1}, {b, -1}}));
    sixteen.push_back(vec(2, {{1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}}));
    std::map<std::array<int, kLetters>, PicVec> by_sign;
    for (const auto& d : sixteen) {
      std::array<int, kLetters> eps{};
      for (int i = 0; i < 5; ++i) eps[i] = intersect(d, m.pic[pair_label(i, 1)]) == 1 ? 1 : -1;
      by_sign[eps] = d;
    }
    require(by_sign.size() == 16, ErrorCode::internal, "sign vector bijection is not injective");
    // lexicographic with + before -
    std::vector<std::array<int, kLetters>> order;
    for (const auto& [eps, d] : by_sign) order.push_back(eps);
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
      for (std::size_t i = 0; i < kLetters; ++i)
        if (x[i] != y[i]) return x[i] > y[i];
      return false;
    });
    for (std::size_t k = 0; k < 16; ++k) {
      m.sign_vectors[k] = order[k];
      int prod = 1;
      for (int e : order[k]) prod *= e;
      require(prod == 1, ErrorCode::internal, "odd sign vector in the model");
      m.pic[11 + k] = by_sign[order[k]];
    }

    // self-checks
    PicVec anti{3, -1, -1, -1, -1, -1, -1};
    std::set<PicVec> distinct(m.pic.begin(), m.pic.end());
    require(distinct.size() == kLines, ErrorCode::internal, "line classes not distinct");
    for (std::size_t a = 0; a < kLines; ++a) {
      require(intersect(m.pic[a], m.pic[a]) == -1, ErrorCode::internal, "line class with self-intersection != -1");
      require(intersect(m.pic[a], anti) == 1, ErrorCode::internal, "line class of anticanonical degree != 1");
      int meets_l0 = m.intersect(0, a);
      require(meets_l0 == (a >= 1 && a <= 10 ? 1 : (a == 0 ? -1 : 0)), ErrorCode::internal,
              "L0 incidence does not match the labels");
    }
    for (int i = 0; i < 5; ++i) {
      PicVec s{};
      for (std::size_t k = 0; k < 7; ++k)
        s[k] = m.pic[0][k] + m.pic[pair_label(i, 1)][k] + m.pic[pair_label(i, -1)][k];
      require(s == anti, ErrorCode::internal, "tritangent trio through L0 is not anticanonical");
    }
    return m;
  }();
  return model;
}

std::size_t Lines27::act(const GroupElt& g, std::size_t label) const {
  if (label == 0) return 0;
  if (label <= 10) {
    int i = static_cast<int>((label - 1) / 2);
    int s = (label - 1) % 2 ? -1 : 1;
    int j = g.sigma[i];
    return pair_label(j, s * g.t[j]);
  }
  const auto& eps = sign_vectors[label - 11];
  std::array<int, kLetters> out{};
  for (std::size_t i = 0; i < kLetters; ++i) out[g.sigma[i]] = eps[i] * g.t[g.sigma[i]];
  return sign_label(out);
}

std::array<std::size_t, kLines> Lines27::permutation(const GroupElt& g) const {
  std::array<std::size_t, kLines> p{};
  for (std::size_t a = 0; a < kLines; ++a) p[a] = act(g, a);
  return p;
}

int Lines27::pic_trace(const GroupElt& g) const {
  // L0, e1..e5 and (0,+) span Pic
  std::vector<std::size_t> basis{0};
  for (int j = 1; j <= 5; ++j) {
    PicVec e{};
    e[j] = 1;
    for (std::size_t k = 0; k < 16; ++k)
      if (pic[11 + k] == e) basis.push_back(11 + k);
  }
  basis.push_back(pair_label(0, 1));
  Matrix v(7, 7), w(7, 7);
  for (std::size_t c = 0; c < 7; ++c) {
    const PicVec& a = pic[basis[c]];
    const PicVec& b = pic[act(g, basis[c])];
    for (std::size_t r = 0; r < 7; ++r) {
      v(r, c) = a[r];
      w(r, c) = b[r];
    }
  }
  Matrix mtx = w * inverse(v);
  Rational tr = 0;
  for (std::size_t i = 0; i < 7; ++i) tr += mtx(i, i);
  require(tr.get_den() == 1, ErrorCode::internal, "non-integral Pic trace");
  return static_cast<int>(tr.get_num().get_si());
}

std::vector<GroupElt> enumerate_group() {
  std::vector<GroupElt> out;
  std::array<int, kLetters> perm{0, 1, 2, 3, 4};
  do {
    for (int mask = 0; mask < 32; ++mask) {
      if (__builtin_popcount(mask) % 2) continue;
      GroupElt g;
      g.sigma = perm;
      for (std::size_t i = 0; i < kLetters; ++i) g.t[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(g);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElt> block_stabilizer(const std::vector<std::vector<int>>& blocks) {
  std::vector<GroupElt> out;
  for (const auto& g : enumerate_group()) {
    bool ok = true;
    for (const auto& b : blocks)
      for (int i : b)
        if (std::find(b.begin(), b.end(), g.sigma[i]) == b.end()) ok = false;
    if (ok) out.push_back(g);
  }
  return out;
}

std::vector<GroupElt> closure(const std::vector<GroupElt>& generators) {
  std::set<GroupElt> h{GroupElt::identity()};
  std::vector<GroupElt> frontier{GroupElt::identity()};
  while (!frontier.empty()) {
    std::vector<GroupElt> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        GroupElt y = compose(x, g);
        if (h.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {h.begin(), h.end()};
}

std::vector<std::size_t> orbit_lengths(const std::vector<GroupElt>& gens) {
  const Lines27& m = Lines27::instance();
  std::vector<int> comp(kLines);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int a) {
    while (comp[a] != a) a = comp[a] = comp[comp[a]];
    return a;
  };
  for (const auto& g : gens)
    for (std::size_t a = 0; a < kLines; ++a) comp[find(static_cast<int>(a))] = find(static_cast<int>(m.act(g, a)));
  std::map<int, std::size_t> sizes;
  for (std::size_t a = 0; a < kLines; ++a) ++sizes[find(static_cast<int>(a))];
  std::vector<std::size_t> out;
  for (const auto& [r, n] : sizes) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cubsurf
