#include "jordan/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "jordan/bounds.hpp"
#include "jordan/dsl.hpp"
#include "jordan/error.hpp"
#include "jordan/finite_group.hpp"
#include "jordan/json_io.hpp"
#include "jordan/semisimple.hpp"

namespace jordan {

namespace {

using json::Json;

struct Options {
  bool json = false;
  bool trace = false;
  std::string caps_file;
  int dim = 0;
  int rank = 8;
  long long n = 0;
  std::string expr;
  std::string file;
  std::string context;
};

// Decimal when it fits the digit cap, otherwise the factored form with its
// log10 enclosure.
std::string value_text(BoundValue const& v, Caps const& caps) {
  if (v.is_infinite()) return "inf";
  if (auto d = v.expand(caps)) return d->get_str();
  auto l = v.log10();
  return v.str() + "  (log10 in [" + l.lo + ", " + l.hi + "])";
}

// Refuses sizes whose decimal expansion alone would pass the digit cap.
void check_digits(double digits, std::string const& what, Caps const& caps) {
  if (digits > static_cast<double>(caps.digit_cap))
    throw CapExceeded("bound-calculus", what + " has about " + std::to_string(static_cast<long long>(digits)) +
                                            " digits, more than " + std::to_string(caps.digit_cap));
}

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Runner {
 public:
  Runner(Options const& opt, Caps caps, std::ostream& out) : opt_(opt), caps_(caps), out_(out) {}

  void catalog() {
    if (opt_.rank < 1) throw InvalidArgument("--rank must be >= 1");
    Json rows = Json::array();
    for (auto t : roots::admissible_types(opt_.rank)) rows.push_back(json::catalog_row(t));
    if (opt_.json) return emit({{"command", "catalog"}, {"types", rows}});
    for (auto const& r : rows) {
      std::string center;
      for (auto const& d : r["center"]) center += (center.empty() ? "Z_" : "+Z_") + d.get<std::string>();
      out_ << r["type"].get<std::string>() << "  rank " << r["rank"].get<std::string>() << "  dim "
           << r["dim"].get<std::string>() << "  center " << (center.empty() ? "1" : center) << "\n";
    }
  }

  void enumerate() {
    auto rows = semisimple::enumeration_table(opt_.dim, caps_);
    if (opt_.json) {
      Json classes = Json::array();
      for (auto const& r : rows) classes.push_back(json::class_row(r));
      return emit({{"command", "enumerate"}, {"dim", std::to_string(opt_.dim)}, {"classes", classes}});
    }
    for (auto const& r : rows)
      out_ << r.cls.name() << "  dim " << r.dim << "  center " << r.quotient.str() << "  faithful " << r.faithful.dim << "\n";
  }

  void nfun() {
    auto v = std::to_string(semisimple::n_of(opt_.dim, caps_));
    if (opt_.json) return emit({{"command", "nfun"}, {"dim", std::to_string(opt_.dim)}, {"value", v}});
    out_ << v << "\n";
  }

  void constant(std::string const& verb, BoundValue const& v, std::string const& arg, std::string const& key) {
    if (opt_.json) return emit({{"command", verb}, {key, arg}, {"value", json::bound_value(v, caps_)}});
    out_ << value_text(v, caps_) << "\n";
  }

  void triple(std::string const& verb, Derivation const& d, Json extra = Json::object()) {
    if (opt_.json) {
      extra["command"] = verb;
      extra["triple"] = json::triple(d.triple, caps_);
      if (opt_.trace) extra["trace"] = json::trace(d.trace, caps_);
      return emit(extra);
    }
    for (auto const& [k, v] : extra.items()) out_ << k << ": " << v.get<std::string>() << "\n";
    out_ << "J <= " << value_text(d.triple.j, caps_) << "\nRk_f <= " << d.triple.rkf.str() << "\nBd <= " << d.triple.bd.str()
         << "\n";
    if (opt_.trace) out_ << "trace:\n" << d.trace.str();
  }

  void dsl() {
    if (opt_.expr.empty() == opt_.file.empty()) throw InvalidArgument("bound dsl needs exactly one of --expr and --file");
    auto e = dsl::parse(opt_.file.empty() ? opt_.expr : read_file(opt_.file), caps_);
    triple("bound dsl", dsl::evaluate(e, caps_), {{"expr", dsl::print(e)}});
  }

  void finite_verb(std::string const& which) {
    auto g = finite::load_perm_group(opt_.file);
    auto order = std::to_string(g.order(caps_));
    if (which == "verify") {
      auto r = finite::verify_bound(g, finite::BoundContext::parse(opt_.context), caps_);
      if (opt_.json) {
        auto j = json::verify_report(r, caps_);
        j["command"] = "finite verify";
        return emit(j);
      }
      out_ << "order " << r.order << "\njordan index " << r.index << "\njordan constant "
           << (r.constant ? std::to_string(*r.constant) : "not computed (over the cap)") << "\nbound "
           << r.context.str() << " " << value_text(r.bound, caps_) << "\n"
           << r.str() << "\n";
      return;
    }
    Json j{{"command", "finite " + which}, {"order", order}};
    if (which == "index") {
      j["max_abelian"] = std::to_string(finite::max_abelian_order(g, caps_));
      j["value"] = std::to_string(finite::jordan_index(g, caps_));
    } else if (which == "constant") {
      j["value"] = std::to_string(finite::jordan_constant_exact(g, caps_));
    } else {
      auto inv = finite::abelian_invariants(g, caps_);
      j["invariants"] = json::abelian_group(inv);
      j["value"] = std::to_string(inv.rank());
    }
    if (opt_.json) return emit(j);
    out_ << j["value"].get<std::string>() << "\n";
  }

 private:
  void emit(Json const& j) { out_ << j.dump(2) << "\n"; }

  Options const& opt_;
  Caps caps_;
  std::ostream& out_;
};

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Jordan constant bounds for algebraic groups", "jordan"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "JSON output");
  app.add_flag("--trace", opt.trace, "print derivation traces");
  app.add_option("--caps", opt.caps_file, "JSON file overriding resource caps");

  Caps caps;
  std::function<void(Runner&)> action;
  auto verb = [&](CLI::App* parent, std::string const& name, std::string const& help, std::function<void(Runner&)> f) {
    auto* sub = parent->add_subcommand(name, help);
    sub->callback([&action, f] { action = f; });
    return sub;
  };
  auto dim = [&](CLI::App* sub) { sub->add_option("--dim", opt.dim, "dimension")->required()->check(CLI::NonNegativeNumber); };
  auto num = [&](CLI::App* sub) { sub->add_option("--n", opt.n, "matrix size")->required()->check(CLI::NonNegativeNumber); };

  verb(&app, "catalog", "simple types with dim, rank and center", [](Runner& r) { r.catalog(); })
      ->add_option("--rank", opt.rank, "largest rank (default 8)");
  dim(verb(&app, "enumerate", "isogeny classes of semisimple groups of dim <= N", [](Runner& r) { r.enumerate(); }));
  dim(verb(&app, "nfun", "N(n), the faithful embedding dimension", [](Runner& r) { r.nfun(); }));
  num(verb(&app, "cnbound", "Jordan's bound C_n for GL_n", [&](Runner& r) {
    auto n = static_cast<double>(opt.n);
    check_digits(2 * n * n * std::log10(std::sqrt(8 * n) + 1), "C_" + std::to_string(opt.n), caps);
    r.constant("cnbound", BoundValue(bounds::cn_bound(static_cast<std::uint64_t>(opt.n))), std::to_string(opt.n), "n");
  }));
  num(verb(&app, "minkowski", "Minkowski's bound M(n) for GL_n(Q)", [&](Runner& r) {
    if (opt.n < 1) throw InvalidArgument("--n must be >= 1");
    auto n = static_cast<double>(opt.n);
    check_digits((std::lgamma(n + 2) + n * std::log(2.0)) / std::log(10.0), "M(" + std::to_string(opt.n) + ")", caps);
    r.constant("minkowski", BoundValue(bounds::minkowski_bound(static_cast<std::uint64_t>(opt.n))), std::to_string(opt.n), "n");
  }));
  dim(verb(&app, "sbound", "C_{N(n)}, bounding semisimple groups of dim <= n", [&](Runner& r) {
    r.constant("sbound", bounds::s_bound(opt.dim, caps), std::to_string(opt.dim), "dim");
  }));

  auto* bound = app.add_subcommand("bound", "(J, Rk_f, Bd) bounds");
  bound->require_subcommand(1);
  dim(verb(bound, "connected", "connected algebraic groups of dim <= N",
           [&](Runner& r) { r.triple("bound connected", bounds::j_connected(opt.dim, caps), {{"dim", std::to_string(opt.dim)}}); }));
  dim(verb(bound, "aut0", "Aut^0 of N-dimensional varieties",
           [&](Runner& r) { r.triple("bound aut0", bounds::j_aut0(opt.dim, caps), {{"dim", std::to_string(opt.dim)}}); }));
  dim(verb(bound, "bir", "connected subgroups of Bir(X), dim X = N",
           [&](Runner& r) { r.triple("bound bir", bounds::j_aut0(opt.dim, caps), {{"dim", std::to_string(opt.dim)}}); }));
  auto* dsl = verb(bound, "dsl", "a group expression", [](Runner& r) { r.dsl(); });
  auto* expr = dsl->add_option("--expr", opt.expr, "expression text");
  dsl->add_option("--file", opt.file, "file holding one expression")->excludes(expr);

  auto* finite = app.add_subcommand("finite", "exact computations on permutation groups");
  finite->require_subcommand(1);
  for (std::string which : {"index", "constant", "rkf", "verify"}) {
    auto* sub = verb(finite, which, "jordan " + which + " of a group file", [which](Runner& r) { r.finite_verb(which); });
    sub->add_option("--file", opt.file, "permutation group file")->required();
    if (which == "verify") sub->add_option("--context", opt.context, "gl:N, connected:N or aut0:N")->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (!opt.caps_file.empty()) caps = load_caps(opt.caps_file);
    Runner runner(opt, caps, out);
    action(runner);
    return 0;
  } catch (CapExceeded const& e) {
    err << "error: cap exceeded in " << e.module() << ": " << e.detail() << "\n";
    if (e.lower_bound()) err << "lower bound: " << *e.lower_bound() << "\n";
    return 3;
  } catch (InvalidArgument const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace jordan
