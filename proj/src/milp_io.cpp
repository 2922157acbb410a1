#include <fstream>
#include <sstream>

#include "milpmt/milp.hpp"

namespace milpmt {

// MILP v1 text format, one statement per line:
//   MILP v1
//   name <id>
//   vars <n>
//   cons <m>
//   min|max
//   obj <j> <coeff>          (nonzero objective entries, ascending j)
//   bnd <j> <lb> <ub>        (every variable, ascending j; inf/-inf allowed)
//   bin <j>                  (ascending)
//   row <i> <sense> <rhs>    (sense in {<=, >=, =}; ascending i)
//   a <i> <j> <coeff>        (ascending (i, j))
// The writer emits canonical instances (rows all <=, objective in the
// authored sense), so write -> read -> write is byte-identical.

std::string write_instance_text(const MilpInstance& inst) {
  std::ostringstream os;
  os << "MILP v1\n";
  os << "name " << inst.name << "\n";
  os << "vars " << inst.num_vars << "\n";
  os << "cons " << inst.num_cons << "\n";
  os << (inst.maximize_input ? "max" : "min") << "\n";
  for (int j = 0; j < inst.num_vars; ++j) {
    double c = inst.maximize_input ? -inst.obj[j] : inst.obj[j];
    if (c != 0.0) os << "obj " << j << " " << fmt_double(c) << "\n";
  }
  for (int j = 0; j < inst.num_vars; ++j)
    os << "bnd " << j << " " << fmt_double(inst.var_lb[j]) << " "
       << fmt_double(inst.var_ub[j]) << "\n";
  for (int j : inst.binary_set) os << "bin " << j << "\n";
  for (int i = 0; i < inst.num_cons; ++i)
    os << "row " << i << " <= " << fmt_double(inst.rhs[i]) << "\n";
  for (const auto& e : inst.cons_matrix)
    os << "a " << e.row << " " << e.col << " " << fmt_double(e.coeff) << "\n";
  return os.str();
}

MilpInstance read_instance_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  require(std::getline(is, line) && line == "MILP v1", "ParseError",
          "missing 'MILP v1' header");

  RawInstance raw;
  int declared_cons = -1;
  std::vector<std::string> tok;
  auto split = [&](const std::string& s) {
    tok.clear();
    std::istringstream ls(s);
    std::string t;
    while (ls >> t) tok.push_back(t);
  };

  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    split(line);
    const std::string& kw = tok[0];
    if (kw == "name") {
      raw.name = tok.size() > 1 ? tok[1] : "";
    } else if (kw == "vars") {
      raw.num_vars = (int)parse_int(tok.at(1));
      raw.obj.assign(raw.num_vars, 0.0);
      raw.var_lb.assign(raw.num_vars, -kInf);
      raw.var_ub.assign(raw.num_vars, kInf);
    } else if (kw == "cons") {
      declared_cons = (int)parse_int(tok.at(1));
    } else if (kw == "min") {
      raw.sense = ObjSense::Minimize;
    } else if (kw == "max") {
      raw.sense = ObjSense::Maximize;
    } else if (kw == "obj") {
      raw.obj.at(parse_int(tok.at(1))) = parse_double(tok.at(2));
    } else if (kw == "bnd") {
      int j = (int)parse_int(tok.at(1));
      raw.var_lb.at(j) = parse_double(tok.at(2));
      raw.var_ub.at(j) = parse_double(tok.at(3));
    } else if (kw == "bin") {
      raw.binary_vars.push_back((int)parse_int(tok.at(1)));
    } else if (kw == "row") {
      int i = (int)parse_int(tok.at(1));
      require(i == (int)raw.rows.size(), "ParseError", "rows must be declared in order");
      RawInstance::Row r;
      const std::string& s = tok.at(2);
      if (s == "<=") r.sense = RowSense::LessEqual;
      else if (s == ">=") r.sense = RowSense::GreaterEqual;
      else if (s == "=") r.sense = RowSense::Equal;
      else fail("ParseError", "bad row sense '" + s + "'");
      r.rhs = parse_double(tok.at(3));
      raw.rows.push_back(std::move(r));
    } else if (kw == "a") {
      int i = (int)parse_int(tok.at(1));
      raw.rows.at(i).entries.push_back(
          {(int)parse_int(tok.at(2)), parse_double(tok.at(3))});
    } else {
      fail("ParseError", "unknown keyword '" + kw + "'");
    }
  }
  require(declared_cons < 0 || declared_cons == (int)raw.rows.size(), "ParseError",
          "declared cons count does not match row statements");
  return canonicalize(raw);
}

void write_instance_file(const MilpInstance& inst, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  require(f.good(), "ParseError", "cannot open for write: " + path);
  f << write_instance_text(inst);
  require(f.good(), "ParseError", "write failed: " + path);
}

MilpInstance read_instance_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(f.good(), "ParseError", "cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  MilpInstance inst = read_instance_text(ss.str());
  return inst;
}

}  // namespace milpmt
