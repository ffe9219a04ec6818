#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "rotposet/rotposet.hpp"

namespace rotposet::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "0,2,5", "{0,2,5}", "{}" or "".
ElementSet parse_element_list(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '{' || c == '}' || c == ' '; }),
             body.end());
  ElementSet out;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad element list '" + text + "'");
    }
    if (used != item.size() || value >= ElementSet::kCapacity) throw UsageError("bad element list '" + text + "'");
    out.insert(value);
  }
  return out;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Poset load_poset(const std::string& path) { return parse_poset(read_file(path)); }
Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

const char* verdict(bool v) { return v ? "true" : "false"; }

struct Options {
  std::string first;
  std::string second;
  std::string lower;
  std::string middle;
  std::string upper;
  std::vector<std::size_t> triple;
  std::size_t element = 0;
  std::size_t count = 0;
  std::size_t guard = 0;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  double probability = 0.5;
  bool machine = false;
};

void print_class(const ClassReport& report, bool machine, std::ostream& out) {
  if (machine) {
    out << "class 0 labeled=" << report.labeled_size() << " iso=" << report.iso_count() << "\n";
    return;
  }
  out << "labeled_size  " << report.labeled_size() << "\n";
  out << "iso_count     " << report.iso_count() << "\n";
  out << std::setw(7) << "member" << "  " << std::left << std::setw(20) << "max" << std::right << std::setw(10)
      << "relations" << std::setw(10) << "iso_type" << "\n";
  for (std::size_t i = 0; i < report.labeled_members.size(); ++i) {
    const Poset& m = report.labeled_members[i];
    const Poset form = iso_canonical(m);
    const auto type = std::lower_bound(report.iso_types.begin(), report.iso_types.end(), form) -
                      report.iso_types.begin();
    out << std::setw(7) << i << "  " << std::left << std::setw(20) << to_string(max_elements(m)) << std::right
        << std::setw(10) << m.relation_count() << std::setw(10) << type << "\n";
  }
}

void print_stats(const StatsReport& report, bool machine, std::ostream& out) {
  if (machine) {
    for (const auto& c : report.classes) {
      out << "class " << c.id << " labeled=" << c.labeled_size << " iso=" << c.iso_size << "\n";
    }
    out << "stats n=" << report.n << " posets=" << report.total_posets << " classes=" << report.classes.size()
        << " min=" << report.min_labeled_size << " max=" << report.max_labeled_size << "\n";
    return;
  }
  out << "# exploratory: rotation-class sizes over all labeled posets on " << report.n << " elements\n";
  out << std::setw(6) << "class" << std::setw(10) << "labeled" << std::setw(6) << "iso" << "\n";
  for (const auto& c : report.classes) {
    out << std::setw(6) << c.id << std::setw(10) << c.labeled_size << std::setw(6) << c.iso_size << "\n";
  }
  out << "posets   " << report.total_posets << "\n";
  out << "classes  " << report.classes.size() << "\n";
  out << "min      " << report.min_labeled_size << "\n";
  out << "max      " << report.max_labeled_size << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotations, cuts and rotation-equivalence of finite posets", "rotposet"};
  app.require_subcommand(1);
  Options o;

  const auto add_poset = [&](CLI::App* sub, const char* name = "poset") {
    sub->add_option(name, o.first, "poset file ('-' for stdin)")->required();
  };
  const auto add_pair = [&](CLI::App* sub) {
    sub->add_option("first", o.first, "first poset file")->required();
    sub->add_option("second", o.second, "second poset file")->required();
  };
  const auto add_spec = [&](CLI::App* sub, bool with_upper) {
    sub->add_option("--A", o.lower, "lower block, comma separated");
    if (with_upper) sub->add_option("--C", o.upper, "upper block, comma separated");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a rotation and print its three blocks");
  add_poset(validate_cmd);
  add_spec(validate_cmd, true);

  auto* rotate_cmd = app.add_subcommand("rotate", "apply a rotation");
  add_poset(rotate_cmd);
  add_spec(rotate_cmd, true);

  auto* cut_cmd = app.add_subcommand("cut", "apply a cut (rotation with empty C)");
  add_poset(cut_cmd);
  add_spec(cut_cmd, false);

  auto* classify_cmd = app.add_subcommand("classify", "classify one triple, or every increasing triple");
  add_poset(classify_cmd);
  classify_cmd->add_option("triple", o.triple, "three distinct elements a b c")->expected(3);

  auto* equiv_cmd = app.add_subcommand("equiv", "are two posets on one domain rotation-equivalent");
  add_pair(equiv_cmd);

  auto* equiv_iso_cmd = app.add_subcommand("equiv-iso", "is the first equivalent to a copy of the second");
  add_pair(equiv_iso_cmd);
  equiv_iso_cmd->add_option("--guard", o.guard, "size limit")->default_val(kDefaultCanonicalGuard);

  auto* witness_cmd = app.add_subcommand("witness", "print a single rotation taking the first to the second");
  add_pair(witness_cmd);

  auto* canon_cmd = app.add_subcommand("canon", "canonical form up to rotation and isomorphism");
  add_poset(canon_cmd);
  canon_cmd->add_option("--guard", o.guard, "size limit")->default_val(kDefaultCanonicalGuard);

  auto* class_cmd = app.add_subcommand("class", "enumerate the rotation class of a poset");
  add_poset(class_cmd);
  class_cmd->add_option("--guard", o.guard, "size limit")->default_val(kDefaultClassGuard);
  class_cmd->add_flag("--machine", o.machine, "machine-readable output");

  auto* stats_cmd = app.add_subcommand("stats", "class sizes over all posets on n elements");
  stats_cmd->add_option("n", o.count, "number of elements")->required();
  stats_cmd->add_option("--guard", o.guard, "size limit")->default_val(kDefaultEnumerationGuard);
  stats_cmd->add_option("--jobs", o.jobs, "worker threads")->default_val(1);
  stats_cmd->add_flag("--machine", o.machine, "machine-readable output");

  auto* reduce_cmd = app.add_subcommand("reduce", "isomorphism reductions");
  reduce_cmd->require_subcommand(1);
  auto* p2g_cmd = reduce_cmd->add_subcommand("p2g", "poset to graph");
  add_poset(p2g_cmd);
  auto* g2p_cmd = reduce_cmd->add_subcommand("g2p", "graph to poset");
  g2p_cmd->add_option("graph", o.first, "graph file ('-' for stdin)")->required();
  auto* iso2rot_cmd = reduce_cmd->add_subcommand("iso2rot", "pad two posets with an antichain");
  add_pair(iso2rot_cmd);

  auto* sample_cmd = app.add_subcommand("sample", "random poset by thinning a random linear order");
  sample_cmd->add_option("n", o.count, "number of elements")->required();
  sample_cmd->add_option("--p", o.probability, "probability of keeping each pair")->default_val(0.5);
  sample_cmd->add_option("--seed", o.seed, "random seed")->default_val(0);

  auto* ext_cmd = app.add_subcommand("ext-check", "find an element realizing a one-point extension");
  add_poset(ext_cmd);
  ext_cmd->add_option("--A", o.lower, "elements below the new point");
  ext_cmd->add_option("--B", o.middle, "elements incomparable to the new point");
  ext_cmd->add_option("--C", o.upper, "elements above the new point");

  auto* pivot_cmd = app.add_subcommand("pivot", "delete an element and rotate around it");
  add_poset(pivot_cmd);
  pivot_cmd->add_option("element", o.element, "pivot element")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const RotationSpec spec{parse_element_list(o.lower), parse_element_list(o.upper)};
    if (*validate_cmd) {
      const auto t = validate(load_poset(o.first), spec);
      out << "A=" << to_string(t.lower) << " B=" << to_string(t.middle) << " C=" << to_string(t.upper) << "\n";
    } else if (*rotate_cmd) {
      out << format_poset(rotate(load_poset(o.first), spec));
    } else if (*cut_cmd) {
      out << format_poset(cut(load_poset(o.first), spec.lower));
    } else if (*classify_cmd) {
      const Poset p = load_poset(o.first);
      if (!o.triple.empty()) {
        const auto& t = o.triple;
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw UsageError("triple elements must be distinct");
        out << to_string(classify_triple(p, t[0], t[1], t[2])) << "\n";
      } else {
        for (Element x = 0; x < p.size(); ++x) {
          for (Element y = x + 1; y < p.size(); ++y) {
            for (Element z = y + 1; z < p.size(); ++z) {
              out << x << " " << y << " " << z << " " << to_string(classify_triple(p, x, y, z)) << "\n";
            }
          }
        }
      }
    } else if (*equiv_cmd) {
      out << verdict(are_equivalent(load_poset(o.first), load_poset(o.second))) << "\n";
    } else if (*equiv_iso_cmd) {
      out << verdict(equivalent_upto_iso(load_poset(o.first), load_poset(o.second), o.guard)) << "\n";
    } else if (*witness_cmd) {
      const auto r = find_rotation(load_poset(o.first), load_poset(o.second));
      out << (r ? format_rotation(*r) : std::string("none")) << "\n";
    } else if (*canon_cmd) {
      out << format_poset(canonical_form(load_poset(o.first), o.guard));
    } else if (*class_cmd) {
      print_class(enumerate_class(load_poset(o.first), o.guard), o.machine, out);
    } else if (*stats_cmd) {
      print_stats(class_stats(o.count, o.guard, o.jobs), o.machine, out);
    } else if (*p2g_cmd) {
      out << format_graph(poset_to_graph(load_poset(o.first)));
    } else if (*g2p_cmd) {
      out << format_poset(graph_to_poset(load_graph(o.first)));
    } else if (*iso2rot_cmd) {
      const auto [left, right] = iso_to_roteq(load_poset(o.first), load_poset(o.second));
      out << "# first, padded\n" << format_poset(left);
      out << "# second, padded\n" << format_poset(right);
      out << "# equivalent-upto-iso " << verdict(equivalent_upto_iso(left, right, 2 * left.size())) << "\n";
    } else if (*sample_cmd) {
      out << format_poset(random_poset(o.count, o.probability, o.seed));
    } else if (*ext_cmd) {
      const ExtensionType type{parse_element_list(o.lower), parse_element_list(o.middle),
                               parse_element_list(o.upper)};
      const auto a = ext_witness(load_poset(o.first), type);
      out << (a ? std::to_string(*a) : std::string("none")) << "\n";
    } else if (*pivot_cmd) {
      out << format_poset(pivot_rotation(load_poset(o.first), o.element));
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace rotposet::cli
