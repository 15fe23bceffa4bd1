#include "cab/problem.hpp"

#include <fstream>
#include <sstream>

#include "cab/parse.hpp"

namespace cab {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos)
    return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w)
    out.push_back(w);
  return out;
}

} // namespace

ProblemFile read_problem(std::istream& in, const std::string& source_name) {
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, std::vector<std::string>>> blocks;
  bool homogeneous = false, saw_vars = false, saw_hom = false;
  std::vector<std::string> gen_lines;
  std::vector<int> gen_linenos;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trimmed(line);
    if (t.empty() || t[0] == '#')
      continue;
    auto err = [&](const std::string& msg) {
      throw invalid_argument_error(source_name + ":" + std::to_string(lineno) + ": " + msg);
    };
    if (t.rfind("vars:", 0) == 0) {
      if (saw_vars)
        err("duplicate vars line");
      vars = split_ws(t.substr(5));
      if (vars.empty())
        err("empty vars line");
      saw_vars = true;
    } else if (t.rfind("homogeneous:", 0) == 0) {
      std::string v = trimmed(t.substr(12));
      if (v == "true")
        homogeneous = true;
      else if (v == "false")
        homogeneous = false;
      else
        err("homogeneous must be true or false");
      saw_hom = true;
    } else if (t.rfind("blocks:", 0) == 0) {
      std::istringstream bs(t.substr(7));
      std::string part;
      while (std::getline(bs, part, ';')) {
        std::size_t eq = part.find('=');
        if (eq == std::string::npos)
          err("block syntax is name = var var ...");
        std::string name = trimmed(part.substr(0, eq));
        std::vector<std::string> bvars = split_ws(part.substr(eq + 1));
        if (name.empty() || bvars.empty())
          err("block syntax is name = var var ...");
        blocks.emplace_back(name, std::move(bvars));
      }
    } else {
      gen_lines.push_back(t);
      gen_linenos.push_back(lineno);
    }
  }
  if (!saw_vars)
    throw invalid_argument_error(source_name + ": missing vars line");
  if (!saw_hom)
    throw invalid_argument_error(source_name + ": missing homogeneous line");

  ProblemFile out;
  out.ring = blocks.empty() ? RingContext::make(vars) : RingContext::make(vars, blocks);
  out.homogeneous = homogeneous;

  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < gen_lines.size(); ++i) {
    Polynomial g;
    try {
      g = parse(gen_lines[i], out.ring);
    } catch (const parse_error& e) {
      throw parse_error(source_name + ":" + std::to_string(gen_linenos[i]) + ": " + e.what(),
                        e.pos);
    }
    if (homogeneous && !g.is_homogeneous())
      throw invalid_argument_error(source_name + ":" + std::to_string(gen_linenos[i]) +
                                   ": generator is not homogeneous");
    gens.push_back(std::move(g));
  }
  out.ideal = Ideal(out.ring, std::move(gens), homogeneous);
  return out;
}

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw invalid_argument_error("cannot open " + path);
  return read_problem(in, path);
}

} // namespace cab
