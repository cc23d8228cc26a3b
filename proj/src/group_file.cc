#include <fstream>
#include <regex>
#include <sstream>

#include "mgs/classical.h"
#include "mgs/errors.h"
#include "mgs/group_file.h"

namespace mgs
{

namespace
{

[[noreturn]] void fail(std::string const &msg)
{
  throw Error(ErrorKind::ParseError, msg);
}

// next line that is neither blank nor a comment
bool next_line(std::istream &in, std::string &line)
{
  while (std::getline(in, line)) {
    auto const start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#')
      continue;
    line = line.substr(start);
    line.erase(line.find_last_not_of(" \t\r") + 1u);
    return true;
  }
  return false;
}

unsigned to_unsigned(std::string const &s)
{
  try {
    std::size_t used = 0;
    unsigned long const v = std::stoul(s, &used);
    if (used != s.size() || v > 0xffffffffu)
      fail("bad number '" + s + "'");
    return static_cast<unsigned>(v);
  } catch (std::logic_error const &) {
    fail("bad number '" + s + "'");
  }
}

std::vector<unsigned> read_row(std::string const &line)
{
  std::istringstream ss(line);
  std::vector<unsigned> row;
  std::string tok;
  while (ss >> tok)
    row.push_back(to_unsigned(tok));
  return row;
}

Matrix read_matrix(std::istream &in, FieldPtr const &field, std::size_t dim)
{
  std::vector<std::vector<unsigned>> rows;
  std::string line;
  while (rows.size() < dim) {
    if (!next_line(in, line))
      fail("matrix ends early");
    auto row = read_row(line);
    if (row.size() != dim)
      fail("row '" + line + "' does not have " + std::to_string(dim) +
           " entries");
    rows.push_back(std::move(row));
  }

  Matrix m = Matrix::from_rows(field, rows);
  if (m.determinant().index == 0u)
    throw Error(ErrorKind::SingularMatrix, "generator is singular");
  return m;
}

} // namespace

GroupSpec parse_group(std::istream &in, std::string label)
{
  std::string line;
  if (!next_line(in, line) || line != "matgroup v1")
    fail("missing 'matgroup v1' header");
  if (!next_line(in, line))
    fail("missing field line");

  static std::regex const header(
    R"(q=(\d+)\^(\d+)\s+d=(\d+)(?:\s+poly=([\d,]+))?)");
  std::smatch m;
  if (!std::regex_match(line, m, header))
    fail("bad field line '" + line + "'");

  unsigned const p = to_unsigned(m[1]), r = to_unsigned(m[2]);
  GroupSpec spec;
  spec.label = std::move(label);
  spec.dim = to_unsigned(m[3]);
  if (spec.dim == 0u)
    throw Error(ErrorKind::BadDimension, "d must be at least 1");

  if (m[4].matched) {
    std::vector<unsigned> poly;
    std::istringstream ss(m[4].str());
    std::string tok;
    while (std::getline(ss, tok, ','))
      poly.push_back(to_unsigned(tok));
    if (poly.size() != r + 1u)
      fail("polynomial degree does not match r");
    spec.field = Field::with_polynomial(p, poly);
  } else {
    if (r > 1u)
      fail("poly= is required when r > 1");
    spec.field = Field::make(p, r);
  }

  while (next_line(in, line)) {
    if (line != "gen")
      fail("expected 'gen', got '" + line + "'");
    spec.gens.push_back(read_matrix(in, spec.field, spec.dim));
  }
  if (spec.gens.empty())
    throw Error(ErrorKind::NoGenerators, "group file has no generators");
  return spec;
}

GroupSpec parse_group(std::string const &text, std::string label)
{
  std::istringstream in(text);
  return parse_group(in, std::move(label));
}

std::string serialize_group(GroupSpec const &spec)
{
  Field const &f = *spec.field;
  std::ostringstream out;
  out << "matgroup v1\n"
      << "q=" << f.characteristic() << "^" << f.degree() << " d=" << spec.dim;
  if (f.degree() > 1u) {
    out << " poly=";
    for (std::size_t i = 0; i < f.polynomial().size(); ++i)
      out << (i ? "," : "") << f.polynomial()[i];
  }
  out << "\n";

  for (Matrix const &g : spec.gens) {
    out << "gen\n";
    for (std::size_t i = 0; i < spec.dim; ++i) {
      for (std::size_t j = 0; j < spec.dim; ++j)
        out << (j ? " " : "") << g(i, j).index;
      out << "\n";
    }
  }
  return out.str();
}

GroupSpec load_group(std::string const &uri)
{
  static std::string const prefix = "builtin:";
  if (uri.rfind(prefix, 0) == 0u) {
    static std::regex const builtin(R"((GL|SL)\((\d+),(\d+)\))");
    std::smatch m;
    std::string const rest = uri.substr(prefix.size());
    if (!std::regex_match(rest, m, builtin))
      fail("unknown builtin '" + rest + "'");

    std::size_t const d = to_unsigned(m[2]);
    unsigned const q = to_unsigned(m[3]);
    GroupSpec spec;
    spec.label = rest;
    spec.field = field_for_order(q);
    spec.dim = d;
    bool const gl = m[1] == "GL";
    spec.gens = gl ? make_gl(d, spec.field) : make_sl(d, spec.field);
    spec.known_order = gl ? gl_order(d, q) : sl_order(d, q);
    return spec;
  }

  std::ifstream in(uri);
  if (!in)
    fail("cannot open '" + uri + "'");
  return parse_group(in, uri);
}

Matrix parse_matrix(std::istream &in, FieldPtr const &field, std::size_t dim)
{
  std::streampos const start = in.tellg();
  std::string line;
  if (next_line(in, line) && line != "gen") {
    in.clear();
    in.seekg(start);
  }
  return read_matrix(in, field, dim);
}

Matrix load_matrix(std::string const &path, FieldPtr const &field,
                   std::size_t dim)
{
  std::ifstream in(path);
  if (!in)
    fail("cannot open '" + path + "'");
  return parse_matrix(in, field, dim);
}

} // namespace mgs
