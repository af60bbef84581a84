#include "chevkit/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace chevkit {

WeylElt WeylElt::identity(const RootSystem& rs) {
  WeylElt w;
  w.rs_ = &rs;
  w.perm_.resize(rs.num_roots());
  for (int r = 0; r < rs.num_roots(); ++r) w.perm_[r] = (uint16_t)r;
  return w;
}

WeylElt WeylElt::reflection(const RootSystem& rs, int root) {
  WeylElt w;
  w.rs_ = &rs;
  w.perm_.resize(rs.num_roots());
  for (int r = 0; r < rs.num_roots(); ++r) w.perm_[r] = (uint16_t)rs.reflect(root, r);
  return w;
}

WeylElt WeylElt::simple(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw RootError("invalid simple index " + std::to_string(i));
  return reflection(rs, rs.simple(i));
}

WeylElt WeylElt::from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElt w = identity(rs);
  for (int i : word) w = w * simple(rs, i);
  return w;
}

WeylElt weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  return WeylElt::from_word(rs, word);
}

WeylElt WeylElt::longest(const RootSystem& rs, const std::set<int>& nodes) {
  WeylElt w = identity(rs);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : nodes)
      if (rs.positive(w.act(rs.simple(i)))) {
        w = w * simple(rs, i);
        grew = true;
      }
  }
  return w;
}

WeylElt WeylElt::longest(const RootSystem& rs) {
  std::set<int> all;
  for (int i = 1; i <= rs.rank(); ++i) all.insert(i);
  return longest(rs, all);
}

int WeylElt::length() const {
  int l = 0;
  for (int r = 0; r < rs_->num_positive(); ++r)
    if (!rs_->positive(perm_[r])) ++l;
  return l;
}

bool WeylElt::is_identity() const {
  for (int r = 0; r < rs_->rank(); ++r)
    if (perm_[r] != r) return false;
  return true;
}

std::vector<int> WeylElt::right_descents() const {
  std::vector<int> out;
  for (int i = 1; i <= rs_->rank(); ++i)
    if (!rs_->positive(perm_[rs_->simple(i)])) out.push_back(i);
  return out;
}

std::vector<int> WeylElt::reduced_word() const {
  // greedy on left descents gives the lex-least reduced word
  std::vector<int> word;
  WeylElt w = *this;
  while (!w.is_identity()) {
    WeylElt wi = w.inverse();
    for (int i = 1; i <= rs_->rank(); ++i)
      if (!rs_->positive(wi.act(rs_->simple(i)))) {
        word.push_back(i);
        w = simple(*rs_, i) * w;
        break;
      }
  }
  return word;
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  if (rs_ != o.rs_) throw RootError("Weyl elements from different systems");
  WeylElt w;
  w.rs_ = rs_;
  w.perm_.resize(perm_.size());
  for (size_t r = 0; r < perm_.size(); ++r) w.perm_[r] = perm_[o.perm_[r]];
  return w;
}

WeylElt WeylElt::inverse() const {
  WeylElt w;
  w.rs_ = rs_;
  w.perm_.resize(perm_.size());
  for (size_t r = 0; r < perm_.size(); ++r) w.perm_[perm_[r]] = (uint16_t)r;
  return w;
}

std::string WeylElt::str() const {
  std::string s = "w[";
  auto word = reduced_word();
  for (size_t i = 0; i < word.size(); ++i) s += (i ? " " : "") + std::to_string(word[i]);
  return s + "]";
}

WeylElt WeylElt::parse(const RootSystem& rs, const std::string& text) {
  auto a = text.find('['), b = text.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a) throw RootError("bad Weyl word '" + text + "'");
  std::istringstream is(text.substr(a + 1, b - a - 1));
  std::vector<int> word;
  for (std::string t; is >> t;) {
    try {
      word.push_back(std::stoi(t));
    } catch (...) {
      throw RootError("bad Weyl word '" + text + "'");
    }
  }
  return from_word(rs, word);
}

size_t WeylElt::hash() const {
  size_t h = 0;
  for (int i = 0; i < rs_->rank(); ++i) h = h * 1000003u + perm_[i];
  return h;
}

PerpOrbits orbit_of_perp_sets(const RootSystem& rs, int k, size_t budget) {
  int N = rs.num_positive();
  // enumerate all sets
  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if ((int)cur.size() == k) {
      sets.push_back(cur);
      if (sets.size() > budget) throw RootError("perpendicular-set budget exceeded");
      return;
    }
    for (int r = start; r < N; ++r) {
      bool ok = true;
      for (int s : cur)
        if (rs.pairing(r, s) != 0) ok = false;
      if (!ok) continue;
      cur.push_back(r);
      self(self, r + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  PerpOrbits out;
  out.total_sets = sets.size();
  for (auto& s : sets) {
    if (out.orbit_of.count(s)) continue;
    int id = (int)out.reps.size();
    out.reps.push_back(s);
    out.sizes.push_back(0);
    std::vector<std::vector<int>> queue{s};
    out.orbit_of[s] = id;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      ++out.sizes[id];
      for (int i = 1; i <= rs.rank(); ++i) {
        std::vector<int> t;
        for (int r : queue[qi]) t.push_back(rs.abs(rs.reflect(rs.simple(i), r)));
        std::sort(t.begin(), t.end());
        if (out.orbit_of.emplace(t, id).second) queue.push_back(std::move(t));
      }
    }
  }
  return out;
}

}  // namespace chevkit
