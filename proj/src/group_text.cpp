#include "chevkit/group_text.hpp"

#include <cctype>
#include <sstream>

namespace chevkit {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("element syntax: " + what + " at position " + std::to_string(i));
  }
  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  void expect(char c) {
    skip();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  std::string until(char close) {
    size_t j = s.find(close, i);
    if (j == std::string::npos) fail(std::string("missing '") + close + "'");
    std::string out = s.substr(i, j - i);
    i = j + 1;
    return out;
  }
  // contents of a balanced (...) group, cursor on '('
  std::string group() {
    expect('(');
    int depth = 1;
    size_t start = i;
    for (; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) break;
    }
    if (depth) fail("unbalanced parentheses");
    return s.substr(start, i++ - start);
  }
};

}  // namespace

GroupElt parse_element(GroupPtr G, const std::string& text) {
  const RootSystem& rs = G->rs;
  GroupElt g = GroupElt::identity(G);
  Cursor c{text};
  auto scalar = [&]() {
    size_t at = c.i;
    std::string e = c.group();
    try {
      return parse_in(G->F, e);
    } catch (const std::exception& ex) {
      c.i = at;
      c.fail(std::string("bad scalar '") + e + "' (" + ex.what() + ")");
    }
  };
  while (!c.done()) {
    size_t at = c.i;
    char kind = text[c.i++];
    if (kind == '1' && (c.i >= text.size() || std::isspace((unsigned char)text[c.i]))) continue;
    if (kind != 'x' && kind != 'h' && kind != 's' && kind != 'n') {
      c.i = at;
      c.fail("unknown atom");
    }
    c.expect('[');
    std::string inner = c.until(']');
    try {
      if (kind == 'x') {
        int r = rs.parse(inner);
        g = g * GroupElt::x(G, r, scalar());
      } else if (kind == 'h') {
        std::string t = inner;
        t.erase(0, t.find_first_not_of(" "));
        if (t.size() > 1 && t[0] == 'w' && (t[1] == '_' || isdigit((unsigned char)t[1]))) {
          int j = std::stoi(t.substr(t[1] == '_' ? 2 : 1));
          if (j < 1 || j > rs.rank()) throw RootError("no fundamental coweight " + t);
          g = g * GroupElt::h_coweight(G, rs.fundamental_coweight(j), scalar());
        } else {
          g = g * GroupElt::h_coroot(G, rs.parse(t), scalar());
        }
      } else if (kind == 's') {
        int i = std::stoi(inner);
        g = g * GroupElt::n_word(G, {i});
      } else {
        std::istringstream is(inner);
        std::string w;
        is >> w;
        if (w != "w") throw RootError("n[...] must start with w");
        std::vector<int> word;
        for (int i; is >> i;) word.push_back(i);
        if (!is.eof()) throw RootError("bad node list");
        g = g * GroupElt::n_word(G, word);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      c.i = at;
      c.fail(ex.what());
    }
  }
  return g;
}

}  // namespace chevkit
