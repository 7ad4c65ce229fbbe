#include "dcop/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace dcop {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string format_number(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  if (v == 0.0) return "0";
  char buf[64];
  if (v == std::floor(v) && std::abs(v) < 9.007199254740992e15) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.9f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string format_utility(Utility u) { return format_number(u.raw()); }

namespace {

class Parser {
 public:
  explicit Parser(std::istream& in) : in_(in) {}

  Instance run() {
    std::vector<std::string> toks;
    if (!next_line(toks) || toks.size() != 2 || toks[0] != "dcop" || toks[1] != "1")
      throw ParseError(line_, "expected header \"dcop 1\"");
    while (next_line(toks)) {
      if (toks[0] == "var")
        parse_var(toks);
      else if (toks[0] == "soft")
        parse_soft(toks);
      else if (toks[0] == "hard")
        parse_hard(toks);
      else
        throw ParseError(line_, "unknown keyword \"" + toks[0] + "\"");
    }
    try {
      validate_instance(inst_);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_, e.what());
    }
    return std::move(inst_);
  }

 private:
  bool next_line(std::vector<std::string>& toks) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
      toks.clear();
      std::istringstream ss(line);
      for (std::string t; ss >> t;) toks.push_back(std::move(t));
      if (!toks.empty()) return true;
    }
    return false;
  }

  long long parse_int(const std::string& tok) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError(line_, "expected integer, got \"" + tok + "\"");
    return v;
  }

  double parse_real(const std::string& tok) {
    double v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError(line_, "expected number, got \"" + tok + "\"");
    if (!std::isfinite(v)) throw ParseError(line_, "non-finite table entry \"" + tok + "\"");
    return v;
  }

  int resolve_var(const std::string& name) {
    auto it = var_index_.find(name);
    if (it == var_index_.end()) throw ParseError(line_, "undeclared variable \"" + name + "\"");
    return it->second;
  }

  void parse_var(const std::vector<std::string>& toks) {
    if (toks.size() < 3) throw ParseError(line_, "var needs a name and at least one value");
    const std::string& name = toks[1];
    if (var_index_.count(name)) throw ParseError(line_, "duplicate variable \"" + name + "\"");
    DomainSet dom;
    for (size_t i = 2; i < toks.size(); ++i) {
      long long v = parse_int(toks[i]);
      if (v < INT32_MIN || v > INT32_MAX) throw ParseError(line_, "domain value out of range");
      if (!dom.values.empty() && dom.values.back() >= v)
        throw ParseError(line_, "domain values must be strictly increasing");
      dom.values.push_back(static_cast<Value>(v));
    }
    var_index_[name] = inst_.num_vars();
    inst_.var_names.push_back(name);
    inst_.domains.push_back(std::move(dom));
    inst_.agent_of.push_back(inst_.num_vars() - 1);
  }

  Factor start_factor(const std::vector<std::string>& toks, FactorKind kind) {
    if (toks.size() != 4) throw ParseError(line_, toks[0] + " needs a name and two variables");
    Factor f;
    f.id = inst_.num_factors();
    f.name = toks[1];
    f.kind = kind;
    f.scope = {resolve_var(toks[2]), resolve_var(toks[3])};
    if (f.scope[0] == f.scope[1])
      throw ParseError(line_, "repeated scope variable \"" + toks[2] + "\"");
    f.cols = inst_.domains[f.scope[1]].size();
    return f;
  }

  void parse_soft(const std::vector<std::string>& toks) {
    Factor f = start_factor(toks, FactorKind::Soft);
    int rows = inst_.domains[f.scope[0]].size();
    std::vector<std::string> row;
    for (int i = 0; i < rows; ++i) {
      if (!next_line(row)) throw ParseError(line_, "unexpected end of file in soft table");
      if (static_cast<int>(row.size()) != f.cols)
        throw ParseError(line_, "expected " + std::to_string(f.cols) + " entries, got " +
                                    std::to_string(row.size()));
      for (const std::string& t : row) f.table.push_back(Utility(parse_real(t)));
    }
    inst_.factors.push_back(std::move(f));
  }

  void parse_hard(const std::vector<std::string>& toks) {
    Factor f = start_factor(toks, FactorKind::Hard);
    const DomainSet& da = inst_.domains[f.scope[0]];
    const DomainSet& db = inst_.domains[f.scope[1]];
    f.table.assign(static_cast<size_t>(da.size()) * db.size(), Utility::forbidden());
    int allowed = 0;
    std::vector<std::string> row;
    for (;;) {
      if (!next_line(row)) throw ParseError(line_, "unexpected end of file in hard block");
      if (row[0] == "end") {
        if (row.size() != 1) throw ParseError(line_, "end takes no arguments");
        break;
      }
      if (row[0] != "allow" || row.size() != 3)
        throw ParseError(line_, "expected \"allow <valueA> <valueB>\" or \"end\"");
      int i = da.index_of(static_cast<Value>(parse_int(row[1])));
      int j = db.index_of(static_cast<Value>(parse_int(row[2])));
      if (i < 0 || j < 0) throw ParseError(line_, "allowed value not in variable domain");
      if (f.at(i, j).is_forbidden()) ++allowed;
      f.at(i, j) = Utility(0.0);
    }
    if (allowed == 0) throw ParseError(line_, "hard factor \"" + f.name + "\" allows no pairs");
    inst_.factors.push_back(std::move(f));
  }

  std::istream& in_;
  int line_ = 0;
  Instance inst_;
  std::map<std::string, int> var_index_;
};

}  // namespace

Instance parse_instance(std::istream& in) { return Parser(in).run(); }

Instance parse_instance_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_instance(ss);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_instance(in);
}

namespace {

void check_serializable_name(const std::string& name) {
  if (name.empty() || name.find_first_of(" \t#") != std::string::npos)
    throw std::invalid_argument("name not serializable: \"" + name + "\"");
}

}  // namespace

void serialize_instance(const Instance& inst, std::ostream& out) {
  validate_instance(inst);
  out << "dcop 1\n";
  for (int v = 0; v < inst.num_vars(); ++v) {
    check_serializable_name(inst.var_names[v]);
    out << "var " << inst.var_names[v];
    for (Value x : inst.domains[v].values) out << ' ' << x;
    out << '\n';
  }
  for (const Factor& f : inst.factors) {
    if (f.arity() != 2)
      throw std::invalid_argument("unary factor not serializable: \"" + f.name + "\"");
    check_serializable_name(f.name);
    const DomainSet& da = inst.domains[f.scope[0]];
    const DomainSet& db = inst.domains[f.scope[1]];
    if (f.kind == FactorKind::Soft) {
      out << "soft " << f.name << ' ' << inst.var_names[f.scope[0]] << ' '
          << inst.var_names[f.scope[1]] << '\n';
      for (int i = 0; i < da.size(); ++i) {
        for (int j = 0; j < db.size(); ++j) {
          Utility u = f.at(i, j);
          if (u.is_forbidden())
            throw std::invalid_argument("soft factor \"" + f.name + "\" has a forbidden entry");
          out << (j ? " " : "") << format_number(u.finite());
        }
        out << '\n';
      }
    } else {
      out << "hard " << f.name << ' ' << inst.var_names[f.scope[0]] << ' '
          << inst.var_names[f.scope[1]] << '\n';
      bool any = false;
      for (int i = 0; i < da.size(); ++i)
        for (int j = 0; j < db.size(); ++j) {
          Utility u = f.at(i, j);
          if (u.is_forbidden()) continue;
          if (u != Utility(0.0))
            throw std::invalid_argument("hard factor \"" + f.name + "\" has a nonzero entry");
          out << "allow " << da.values[i] << ' ' << db.values[j] << '\n';
          any = true;
        }
      if (!any) throw std::invalid_argument("hard factor \"" + f.name + "\" allows no pairs");
      out << "end\n";
    }
  }
}

std::string serialize_instance_text(const Instance& inst) {
  std::ostringstream ss;
  serialize_instance(inst, ss);
  return ss.str();
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  serialize_instance(inst, out);
}

void write_results_csv(const std::vector<ResultRecord>& rows, std::ostream& out) {
  out << "instance_id,seed,n_vars,n_factors,algorithm,value,feasible,vm,B,upper_bound,wall_ms\n";
  for (const ResultRecord& r : rows) {
    out << r.instance_id << ',' << r.seed << ',' << r.n_vars << ',' << r.n_factors << ','
        << r.algorithm << ',' << format_utility(r.value) << ','
        << (r.feasible ? "true" : "false") << ',' << format_utility(r.tree_value) << ','
        << format_number(r.removed_weight) << ',' << format_utility(r.upper_bound) << ','
        << format_number(r.wall_ms) << '\n';
  }
}

}  // namespace dcop
