#pragma once
// Minimal XML reader for lexicon class files.
//
// Covers the subset those files use: prolog, DOCTYPE, comments, CDATA,
// processing instructions, elements with quoted attributes, character
// references in attribute values. Element text content is skipped; the
// lexicon format keeps all data in attributes.

#include "vnroles/error.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vnroles::xml {

struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;  // document order
  std::vector<Element> children;

  bool operator==(const Element&) const = default;

  const std::string* attribute(std::string_view key) const {
    for (const auto& [k, v] : attributes) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  const Element* first_child(std::string_view child_name) const {
    for (const Element& c : children) {
      if (c.name == child_name) return &c;
    }
    return nullptr;
  }

  template <typename Fn>
  void for_each_child(std::string_view child_name, Fn&& fn) const {
    for (const Element& c : children) {
      if (c.name == child_name) fn(c);
    }
  }
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t pos() const { return pos_; }

  bool starts_with(std::string_view prefix) const {
    return text_.compare(pos_, prefix.size(), prefix) == 0;
  }

  void advance(std::size_t n = 1) { pos_ += n; }

  void skip_whitespace() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  // Skips past the next occurrence of `end`; fails at EOF.
  void skip_until(std::string_view end, std::string_view what) {
    std::size_t found = text_.find(end, pos_);
    if (found == std::string_view::npos) fail(std::string("unterminated ") + std::string(what));
    pos_ = found + end.size();
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') ++line;
    }
    raise(ErrorKind::MalformedXml, what + " (line " + std::to_string(line) + ")");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '-' ||
         c == '.';
}

inline std::string read_name(Cursor& cur) {
  if (cur.eof() || !is_name_start(cur.peek())) cur.fail("expected name");
  std::string name;
  while (!cur.eof() && is_name_char(cur.peek())) {
    name.push_back(cur.peek());
    cur.advance();
  }
  return name;
}

inline void append_char_reference(Cursor& cur, std::string& out) {
  // cursor sits just past "&#"
  int base = 10;
  if (!cur.eof() && (cur.peek() == 'x' || cur.peek() == 'X')) {
    base = 16;
    cur.advance();
  }
  unsigned long code = 0;
  bool any = false;
  while (!cur.eof() && cur.peek() != ';') {
    int digit;
    char c = cur.peek();
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (base == 16 && c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else if (base == 16 && c >= 'A' && c <= 'F') digit = c - 'A' + 10;
    else cur.fail("bad character reference");
    code = code * base + static_cast<unsigned long>(digit);
    if (code > 0x10FFFF) cur.fail("character reference out of range");
    any = true;
    cur.advance();
  }
  if (cur.eof() || !any || code == 0) cur.fail("bad character reference");
  cur.advance();  // ';'
  // UTF-8 encode
  if (code < 0x80) {
    out.push_back(static_cast<char>(code));
  } else if (code < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (code >> 6)));
    out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
  } else if (code < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (code >> 12)));
    out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (code >> 18)));
    out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
  }
}

inline void append_entity(Cursor& cur, std::string& out) {
  // cursor sits just past "&"
  if (!cur.eof() && cur.peek() == '#') {
    cur.advance();
    append_char_reference(cur, out);
    return;
  }
  std::string name;
  while (!cur.eof() && cur.peek() != ';') {
    name.push_back(cur.peek());
    cur.advance();
  }
  if (cur.eof()) cur.fail("unterminated entity reference");
  cur.advance();  // ';'
  if (name == "amp") out.push_back('&');
  else if (name == "lt") out.push_back('<');
  else if (name == "gt") out.push_back('>');
  else if (name == "quot") out.push_back('"');
  else if (name == "apos") out.push_back('\'');
  else cur.fail("unknown entity &" + name + ";");
}

inline std::string read_attribute_value(Cursor& cur) {
  if (cur.eof() || (cur.peek() != '"' && cur.peek() != '\'')) cur.fail("expected quoted value");
  const char quote = cur.peek();
  cur.advance();
  std::string value;
  while (true) {
    if (cur.eof()) cur.fail("unterminated attribute value");
    char c = cur.peek();
    if (c == quote) {
      cur.advance();
      return value;
    }
    if (c == '<') cur.fail("'<' in attribute value");
    cur.advance();
    if (c == '&') append_entity(cur, value);
    else value.push_back(c);
  }
}

// Skips comments, PIs and (before the root) a DOCTYPE declaration.
inline bool skip_misc(Cursor& cur, bool allow_doctype) {
  if (cur.starts_with("<!--")) {
    cur.advance(4);
    cur.skip_until("-->", "comment");
    return true;
  }
  if (cur.starts_with("<?")) {
    cur.advance(2);
    cur.skip_until("?>", "processing instruction");
    return true;
  }
  if (allow_doctype && cur.starts_with("<!DOCTYPE")) {
    cur.advance(9);
    // tolerate an internal subset in brackets
    while (!cur.eof() && cur.peek() != '>' && cur.peek() != '[') cur.advance();
    if (!cur.eof() && cur.peek() == '[') {
      cur.skip_until("]", "DOCTYPE internal subset");
    }
    while (!cur.eof() && cur.peek() != '>') cur.advance();
    if (cur.eof()) cur.fail("unterminated DOCTYPE");
    cur.advance();
    return true;
  }
  return false;
}

inline Element read_element(Cursor& cur) {
  if (cur.eof() || cur.peek() != '<') cur.fail("expected element");
  cur.advance();
  Element element;
  element.name = read_name(cur);

  // attributes
  while (true) {
    cur.skip_whitespace();
    if (cur.eof()) cur.fail("unterminated start tag <" + element.name);
    if (cur.peek() == '/' || cur.peek() == '>') break;
    std::string key = read_name(cur);
    cur.skip_whitespace();
    if (cur.eof() || cur.peek() != '=') cur.fail("expected '=' after attribute " + key);
    cur.advance();
    cur.skip_whitespace();
    element.attributes.emplace_back(std::move(key), read_attribute_value(cur));
  }

  if (cur.peek() == '/') {
    cur.advance();
    if (cur.eof() || cur.peek() != '>') cur.fail("expected '>' after '/'");
    cur.advance();
    return element;  // self-closing
  }
  cur.advance();  // '>'

  // content
  while (true) {
    if (cur.eof()) cur.fail("missing end tag </" + element.name + ">");
    if (cur.peek() != '<') {
      cur.advance();  // text content is not used
      continue;
    }
    if (cur.starts_with("</")) {
      cur.advance(2);
      std::string end_name = read_name(cur);
      if (end_name != element.name) {
        cur.fail("end tag </" + end_name + "> does not match <" + element.name + ">");
      }
      cur.skip_whitespace();
      if (cur.eof() || cur.peek() != '>') cur.fail("malformed end tag");
      cur.advance();
      return element;
    }
    if (cur.starts_with("<![CDATA[")) {
      cur.advance(9);
      cur.skip_until("]]>", "CDATA section");
      continue;
    }
    if (skip_misc(cur, /*allow_doctype=*/false)) continue;
    element.children.push_back(read_element(cur));
  }
}

}  // namespace detail

// Parses a complete document and returns its root element.
inline Element parse_document(std::string_view text) {
  detail::Cursor cur(text);
  while (true) {
    cur.skip_whitespace();
    if (cur.eof()) cur.fail("document has no root element");
    if (!detail::skip_misc(cur, /*allow_doctype=*/true)) break;
  }
  Element root = detail::read_element(cur);
  while (true) {
    cur.skip_whitespace();
    if (cur.eof()) return root;
    if (!detail::skip_misc(cur, /*allow_doctype=*/false)) {
      cur.fail("content after root element");
    }
  }
}

}  // namespace vnroles::xml
