// ortab: command-line front end.
//
// Exit status: 0 success, 1 a check failed or the input is outside an
// operation's domain, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ortab/enumeration.hpp"
#include "ortab/io.hpp"
#include "ortab/jdt.hpp"
#include "ortab/push.hpp"

using namespace ortab;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file = "-";
  std::optional<int> n;
  std::string shape;
  bool quasi = false;
  bool trace = false;
  bool spin_removal = false;
  bool pretty = false;
  bool count = false;
  bool inverse = false;
  std::optional<int> level;
};

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

// Structural problems in a tableau file (skips, stars) count as parse errors.
Tableau load_tableau(const std::string& path) {
  const std::string text = slurp(path);
  try {
    return parse_tableau(text);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(std::string("not a tableau: ") + e.what());
  }
}

Shape shape_of(const Options& o) {
  if (o.shape.empty()) throw UsageError("--shape is required");
  Shape s;
  try {
    s = Shape::parse(o.shape);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (o.n && *o.n != s.n) throw UsageError("--n disagrees with the length of --shape");
  return s;
}

void print(const SkewTableau& s, bool pretty) {
  std::cout << (pretty ? format_pretty(s) : format_skew(s)) << "\n";
}

void print(const Tableau& t, bool pretty) { print(to_skew(t), pretty); }

void print_steps(const SlideTrace& tr) {
  for (const SlideStep& st : tr.steps) {
    std::cout << "# " << to_string(st.kind) << " from (" << st.star.row << "," << st.star.col << ")\n";
  }
}

int cmd_validate(const Options& o) {
  const Tableau t = load_tableau(o.file);
  const bool ss = is_semistandard(t);
  std::cout << "shape " << t.shape().to_string() << "\n";
  std::cout << "semistandard " << (ss ? "yes" : "no") << "\n";
  if (!ss) return 1;
  const auto levels = nqs_levels(t);
  std::cout << "nqs_levels";
  for (int s : levels) std::cout << " " << s;
  std::cout << "\n";
  std::cout << "quasistandard " << (levels.empty() ? "yes" : "no") << "\n";
  return 0;
}

int cmd_double(const Options& o) {
  const SkewTableau s = parse_skew(slurp(o.file));
  print(dble(s), o.pretty);
  return 0;
}

int cmd_push(const Options& o) {
  const Tableau t = load_tableau(o.file);
  if (!is_semistandard(t)) {
    std::cerr << "error: the tableau is not semistandard\n";
    return 1;
  }
  PushTrace tr;
  Tableau u;
  if (o.level) {
    u = remove_column(t, *o.level, &tr);
    const Shape expected = remove_height(t.shape(), *o.level,
                                         o.spin_removal ? HeightNRemoval::spin : HeightNRemoval::admissible);
    if (u.shape() != expected) {
      std::cerr << "error: removal left shape " << u.shape().to_string() << ", expected "
                << expected.to_string() << "\n";
      return 1;
    }
  } else {
    u = push(t, &tr);
  }
  if (o.trace) {
    for (const PushPass& p : tr.passes) {
      std::cout << "# block " << p.block << " level " << p.level << (p.spin_dropped ? " spin dropped" : "")
                << "\n";
      if (!p.spin_dropped) {
        std::cout << format_skew(p.slid) << "\n";
        print_steps(p.trace);
      }
      std::cout << format_tableau(p.result) << "\n";
    }
    std::cout << "# result\n";
  }
  print(u, o.pretty);
  return 0;
}

int cmd_unpush(const Options& o) {
  if (o.shape.empty()) throw UsageError("unpush needs --shape");
  const Shape lambda = shape_of(o);
  const Tableau u = load_tableau(o.file);
  if (u.n != lambda.n) throw UsageError("rank of the tableau and --shape differ");
  if (!is_quasistandard(u) || !is_semistandard(u)) {
    std::cerr << "error: the tableau is not quasistandard\n";
    return 1;
  }
  print(unpush(u, lambda), o.pretty);
  return 0;
}

int cmd_ojdt(const Options& o) {
  const SkewTableau s = parse_skew(slurp(o.file));
  if (s.stars().size() != 1) throw UsageError("ojdt needs exactly one star");
  SlideTrace tr;
  const SkewTableau out = o.inverse ? ojdt_inverse_slide(s, &tr) : ojdt_slide(s, &tr);
  if (o.trace) print_steps(tr);
  print(out, o.pretty);
  return 0;
}

int cmd_sigma(const Options& o) {
  print(sigma(parse_skew(slurp(o.file))), o.pretty);
  return 0;
}

int cmd_enumerate(const Options& o) {
  const Shape lambda = shape_of(o);
  if (o.count) {
    std::cout << count_tableaux(lambda, o.quasi) << "\n";
    return 0;
  }
  bool first = true;
  for_each_tableau(lambda, o.quasi, [&](const Tableau& t) {
    if (!first) std::cout << "\n";
    first = false;
    print(t, o.pretty);
  });
  return 0;
}

int cmd_dim(const Options& o) {
  std::cout << weyl_dim(shape_of(o)) << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  const VerifyReport r = verify_shape(shape_of(o));
  std::cout << r.to_text();
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal semistandard tableaux: doubling, jeu de taquin and push"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* c) { c->add_option("file", o.file, "tableau file, '-' for stdin"); };
  auto add_shape = [&](CLI::App* c) {
    c->add_option("--n", o.n, "rank");
    c->add_option("--shape", o.shape, "coefficients a1,...,an");
  };

  auto* validate = app.add_subcommand("validate", "check semistandardness and list NQS levels");
  add_file(validate);
  auto* dbl = app.add_subcommand("double", "print the double");
  add_file(dbl);
  dbl->add_flag("--pretty", o.pretty, "ASCII grid");
  auto* push = app.add_subcommand("push", "apply p = (ojdt)^max");
  add_file(push);
  push->add_flag("--trace", o.trace, "print every pass and slide step");
  push->add_flag("--pretty", o.pretty, "ASCII grid");
  push->add_option("--level", o.level, "remove one column at this NQS level only");
  push->add_flag("--spin-removal", o.spin_removal, "with --level n, expect the spin column to go");
  auto* unpush = app.add_subcommand("unpush", "invert push into shape --shape");
  add_file(unpush);
  add_shape(unpush);
  unpush->add_flag("--pretty", o.pretty, "ASCII grid");
  auto* ojdt = app.add_subcommand("ojdt", "slide the star once");
  add_file(ojdt);
  ojdt->add_flag("--inverse", o.inverse, "slide back from an exterior corner");
  ojdt->add_flag("--trace", o.trace, "print the steps on the double");
  ojdt->add_flag("--pretty", o.pretty, "ASCII grid");
  auto* sig = app.add_subcommand("sigma", "half-turn with letters barred");
  add_file(sig);
  sig->add_flag("--pretty", o.pretty, "ASCII grid");
  auto* enumerate = app.add_subcommand("enumerate", "list SS (or QS) tableaux of a shape");
  add_shape(enumerate);
  enumerate->add_flag("--quasi", o.quasi, "quasistandard only");
  enumerate->add_flag("--count", o.count, "print the count only");
  enumerate->add_flag("--pretty", o.pretty, "ASCII grid");
  auto* dim = app.add_subcommand("dim", "Weyl dimension of a shape");
  add_shape(dim);
  auto* verify = app.add_subcommand("verify", "check the push bijection on a shape");
  add_shape(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*dbl) return cmd_double(o);
    if (*push) return cmd_push(o);
    if (*unpush) return cmd_unpush(o);
    if (*ojdt) return cmd_ojdt(o);
    if (*sig) return cmd_sigma(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*dim) return cmd_dim(o);
    if (*verify) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
