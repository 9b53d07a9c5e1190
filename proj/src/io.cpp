/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "revsyn/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace revsyn {

namespace {

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) {
    part = strip(part);
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

code_t parse_code(const std::string& tok, int line_no) {
  try {
    if (tok.rfind("0b", 0) == 0 || tok.rfind("0B", 0) == 0)
      return std::stoull(tok.substr(2), nullptr, 2);
    if (tok.rfind("0x", 0) == 0 || tok.rfind("0X", 0) == 0)
      return std::stoull(tok.substr(2), nullptr, 16);
    return std::stoull(tok, nullptr, 10);
  } catch (const std::exception&) {
    throw syntax_error("bad numeric literal '" + tok + "'", line_no);
  }
}

} // namespace

TfcFile parse_tfc(std::istream& in) {
  std::vector<std::string> names;
  std::map<std::string, line_t> index;
  std::vector<std::string> inputs, outputs;
  std::vector<Gate> gates;
  bool saw_v = false;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line == "BEGIN" || line == "END") continue;

    if (line[0] == '.') {
      const auto sp = line.find_first_of(" \t");
      const std::string key = sp == std::string::npos ? line : line.substr(0, sp);
      const std::string rest = sp == std::string::npos ? "" : strip(line.substr(sp));
      if (key == ".v") {
        names = split(rest, ',');
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (index.count(names[i])) throw syntax_error("duplicate line name", line_no);
          index[names[i]] = static_cast<line_t>(i);
        }
        saw_v = true;
      } else if (key == ".i") {
        inputs = split(rest, ',');
      } else if (key == ".o") {
        outputs = split(rest, ',');
      } else if (key == ".c") {
        for (const auto& tok : split(rest, ','))
          if (tok != "0") throw syntax_error("only constant-0 ancilla lines are supported", line_no);
      } else if (key == ".ol" || key == ".og") {
        // garbage markers from other tools; outputs stay as declared by .o
      } else {
        throw syntax_error("unknown header directive '" + key + "'", line_no);
      }
      continue;
    }

    // gate line: tN name[,name']... with the last name the target
    if (line[0] != 't' && line[0] != 'T')
      throw syntax_error("expected a tN gate line", line_no);
    const auto sp = line.find_first_of(" \t");
    if (sp == std::string::npos) throw syntax_error("gate line lacks operands", line_no);
    int arity = 0;
    try {
      arity = std::stoi(line.substr(1, sp - 1));
    } catch (const std::exception&) {
      throw syntax_error("bad gate arity", line_no);
    }
    auto toks = split(line.substr(sp), ',');
    if (static_cast<int>(toks.size()) != arity)
      throw syntax_error("gate arity does not match its operand count", line_no);
    if (!saw_v) throw syntax_error("gate before .v header", line_no);

    std::vector<line_t> pos, neg;
    line_t target = 0;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      std::string name = toks[i];
      bool negated = false;
      if (!name.empty() && name.back() == '\'') {
        negated = true;
        name.pop_back();
      }
      auto it = index.find(name);
      if (it == index.end()) throw syntax_error("unknown line name '" + name + "'", line_no);
      if (i + 1 == toks.size()) {
        if (negated) throw syntax_error("target cannot be negated", line_no);
        target = it->second;
      } else {
        (negated ? neg : pos).push_back(it->second);
      }
    }
    try {
      gates.emplace_back(target, std::move(pos), std::move(neg));
    } catch (const error& e) {
      throw syntax_error(e.what(), line_no);
    }
  }
  if (!saw_v) throw syntax_error(".v header missing", line_no);

  Circuit c(static_cast<int>(names.size()));
  for (auto& g : gates) c.append(std::move(g));

  if (!inputs.empty()) {
    // inputs must be a prefix of .v (ancilla lines come after the inputs)
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      auto it = index.find(inputs[i]);
      if (it == index.end()) throw syntax_error("unknown input name", 0);
      if (it->second != static_cast<line_t>(i))
        throw syntax_error("significant inputs must form the leading lines", 0);
    }
    c.set_significant_inputs(static_cast<int>(inputs.size()));
  }
  if (!outputs.empty()) {
    std::vector<line_t> outs;
    for (const auto& name : outputs) {
      auto it = index.find(name);
      if (it == index.end()) throw syntax_error("unknown output name", 0);
      outs.push_back(it->second);
    }
    c.set_significant_outputs(std::move(outs));
  }
  return {std::move(c), std::move(names)};
}

TfcFile parse_tfc_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_tfc(ss);
}

std::string emit_tfc(const Circuit& c, const std::vector<std::string>& names_in,
                     const std::vector<std::string>& header_comments) {
  std::vector<std::string> names = names_in;
  if (names.empty())
    for (int i = 0; i < c.width(); ++i) names.push_back("x" + std::to_string(i + 1));
  if (static_cast<int>(names.size()) != c.width())
    throw structural_error("name count differs from circuit width");

  std::ostringstream out;
  for (const auto& cm : header_comments) out << "# " << cm << "\n";
  out << ".v ";
  for (int i = 0; i < c.width(); ++i) out << (i ? "," : "") << names[i];
  out << "\n.i ";
  for (int i = 0; i < c.significant_inputs(); ++i) out << (i ? "," : "") << names[i];
  out << "\n";
  if (c.significant_outputs()) {
    out << ".o ";
    const auto& outs = *c.significant_outputs();
    for (std::size_t i = 0; i < outs.size(); ++i) out << (i ? "," : "") << names[outs[i]];
    out << "\n";
  }
  if (c.ancilla_count() > 0) {
    out << ".c ";
    for (int i = 0; i < c.ancilla_count(); ++i) out << (i ? "," : "") << "0";
    out << "\n";
  }
  out << "BEGIN\n";
  for (const auto& g : c.gates()) {
    out << "t" << (g.control_count() + 1) << " ";
    bool first = true;
    auto emit_ctl = [&](line_t l, bool negated) {
      out << (first ? "" : ",") << names[l] << (negated ? "'" : "");
      first = false;
    };
    std::vector<std::pair<line_t, bool>> ctls;
    for (line_t p : g.pos()) ctls.emplace_back(p, false);
    for (line_t q : g.neg()) ctls.emplace_back(q, true);
    std::sort(ctls.begin(), ctls.end());
    for (auto [l, neg] : ctls) emit_ctl(l, neg);
    out << (first ? "" : ",") << names[g.target()] << "\n";
  }
  out << "END\n";
  return out.str();
}

BooleanMapping parse_table(std::istream& in) {
  int n = -1, m = -1;
  std::vector<code_t> rows;
  std::vector<std::uint8_t> care;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line[0] == '.') {
      const auto parts = split(line, ' ');
      if (parts.size() != 2) throw syntax_error("bad table header", line_no);
      if (parts[0] == ".i")
        n = std::stoi(parts[1]);
      else if (parts[0] == ".o")
        m = std::stoi(parts[1]);
      else
        throw syntax_error("unknown table directive", line_no);
      continue;
    }
    if (n < 0 || m < 0) throw syntax_error("table rows before .i/.o headers", line_no);
    if (line == "-") {
      rows.push_back(0);
      care.push_back(0);
      continue;
    }
    code_t v;
    if (line.find_first_not_of("01") == std::string::npos && static_cast<int>(line.size()) == m) {
      v = 0; // plain bit string, most significant first
      for (char ch : line) v = (v << 1) | static_cast<code_t>(ch - '0');
    } else {
      v = parse_code(line, line_no);
    }
    if (m < 64 && v >= (code_t{1} << m)) throw syntax_error("row value exceeds 2^m", line_no);
    rows.push_back(v);
    care.push_back(1);
  }
  if (n < 0 || m < 0) throw syntax_error("missing .i/.o headers", line_no);
  if (rows.size() != (std::size_t{1} << n)) throw syntax_error("row count is not 2^n", line_no);
  BooleanMapping f;
  f.n_in = n;
  f.m_out = m;
  f.table = std::move(rows);
  if (std::find(care.begin(), care.end(), 0) != care.end()) f.care = std::move(care);
  return f;
}

std::string emit_table(const BooleanMapping& f, const std::vector<std::string>& header_comments) {
  std::ostringstream out;
  for (const auto& cm : header_comments) out << "# " << cm << "\n";
  out << ".i " << f.n_in << "\n.o " << f.m_out << "\n";
  for (std::size_t v = 0; v < f.table.size(); ++v) {
    if (!f.row_defined(v)) {
      out << "-\n";
      continue;
    }
    std::string bits(f.m_out, '0');
    for (int b = 0; b < f.m_out; ++b)
      if ((f.table[v] >> b) & 1) bits[f.m_out - 1 - b] = '1';
    out << bits << "\n";
  }
  return out.str();
}

Permutation parse_permutation(std::istream& in, int default_width) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  // try the cycle form first
  if (text.find('(') != std::string::npos) {
    int width = default_width;
    std::vector<std::vector<code_t>> cycles;
    std::istringstream ss(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(ss, raw)) {
      ++line_no;
      std::string line = raw;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = strip(line);
      if (line.empty()) continue;
      if (line.rfind(".n", 0) == 0) {
        width = std::stoi(strip(line.substr(2)));
        continue;
      }
      std::size_t pos = 0;
      while ((pos = line.find('(', pos)) != std::string::npos) {
        const auto close = line.find(')', pos);
        if (close == std::string::npos) throw syntax_error("unbalanced cycle parenthesis", line_no);
        std::vector<code_t> cyc;
        for (const auto& tok : split(line.substr(pos + 1, close - pos - 1), ' '))
          cyc.push_back(parse_code(tok, line_no));
        cycles.push_back(std::move(cyc));
        pos = close + 1;
      }
    }
    if (width == 0) {
      code_t mx = 1;
      for (const auto& c : cycles)
        for (code_t v : c) mx = std::max(mx, v);
      while ((code_t{1} << width) <= mx) ++width;
    }
    return Permutation::from_cycles(width, cycles);
  }
  // otherwise a truth table of a bijection
  std::istringstream ss(text);
  BooleanMapping f = parse_table(ss);
  if (!f.is_bijection()) throw structural_error("permutation table is not a bijection");
  return Permutation::from_dense(f.table);
}

std::string emit_cycles(const Permutation& h) {
  std::ostringstream out;
  out << ".n " << h.n() << "\n";
  for (const auto& c : h.cycle_decomposition()) {
    out << "(";
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << ")\n";
  }
  return out.str();
}

} // namespace revsyn
