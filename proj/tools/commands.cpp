#include "options.hpp"
#include "report.hpp"

#include "diagonalis/box_cache.hpp"
#include "diagonalis/family.hpp"
#include "diagonalis/geometry.hpp"
#include "diagonalis/identities.hpp"
#include "diagonalis/json_io.hpp"
#include "diagonalis/recurrence.hpp"
#include "diagonalis/sequences.hpp"
#include "diagonalis/seriesbox.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace diagonalis::cli {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty list '" + s + "'");
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

template <class R>
std::string ring_string(const R& v) {
  if constexpr (std::is_same_v<R, UniPoly>)
    return to_string(v, "l");
  else
    return to_string(v);
}

template <class R>
std::vector<std::string> strings(const std::vector<R>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(ring_string(x));
  return out;
}

std::string index_string(const ExponentVector& n) {
  std::vector<std::string> parts;
  for (unsigned e : n.e) parts.push_back(std::to_string(e));
  return "(" + join(parts) + ")";
}

// ---- family selection ------------------------------------------------------

bool is_lambda_family(const FamilyOptions& f) {
  return f.coeffs.empty() && lower(f.family) == "straublambda" && f.lambda.empty();
}

FamilySpec<Rational> rational_family(const FamilyOptions& f) {
  if (!f.coeffs.empty()) {
    auto c = parse_list(f.coeffs);
    const std::size_t d = f.d ? f.d : c.size() - 1;
    return make_family(d, std::move(c), "custom");
  }
  if (f.family.empty()) throw std::invalid_argument("choose a family with --family or --coeffs");
  if (lower(f.family) == "straublambda") {
    auto spec = specialize(straub_lambda(), parse_rational(f.lambda));
    spec.name = "StraubLambda(l=" + f.lambda + ")";
    return spec;
  }
  FamilyParams p;
  if (!f.a.empty()) p.a = parse_rational(f.a);
  if (!f.b.empty()) p.b = parse_rational(f.b);
  if (!f.c.empty()) p.c = parse_rational(f.c);
  if (f.d) p.d = f.d;
  return named_instance(f.family, p);
}

template <class R>
json family_json(const FamilySpec<R>& spec, const FamilyOptions& f) {
  json j = {{"name", spec.name},
            {"d", spec.dim},
            {"ring", std::is_same_v<R, UniPoly> ? "Qlambda" : "Q"},
            {"coeffs", strings(spec.coeffs)}};
  json params = json::object();
  if (!f.a.empty()) params["a"] = to_string(parse_rational(f.a));
  if (!f.b.empty()) params["b"] = to_string(parse_rational(f.b));
  if (!f.c.empty()) params["c"] = to_string(parse_rational(f.c));
  if (!f.lambda.empty()) params["lambda"] = to_string(parse_rational(f.lambda));
  if (!params.empty()) j["params"] = params;
  return j;
}

template <class R>
std::string family_line(const FamilySpec<R>& spec) {
  return "family " + spec.name + " (d=" + std::to_string(spec.dim) + ", coeffs " + join(strings(spec.coeffs)) + ")";
}

json base_report(const std::string& command) { return {{"schema", "v1"}, {"command", command}}; }

// ---- boxes and the cache ---------------------------------------------------

BoxOptions box_options(const CommonOptions& common, const std::string& symmetry = "auto") {
  BoxOptions o;
  o.workers = std::max(1u, common.workers);
  o.max_entries = common.mem_limit;
  if (symmetry == "on")
    o.symmetry = SymmetryMode::on;
  else if (symmetry == "off")
    o.symmetry = SymmetryMode::off;
  else if (symmetry != "auto")
    throw std::invalid_argument("--symmetry must be auto, on or off");
  return o;
}

std::optional<fs::path> cache_directory(const CommonOptions& common) {
  if (common.no_cache) return std::nullopt;
  if (!common.cache_dir.empty()) return fs::path(common.cache_dir);
  if (const char* env = std::getenv("DIAGONALIS_CACHE"); env && *env) return fs::path(env);
  return fs::path(".diagonalis-cache");
}

template <CoefficientRing R>
std::string store_box(const CoeffBox<R>& box, const fs::path& dir) {
  fs::create_directories(dir);
  const fs::path path = dir / box_cache_filename(box.denominator(), box.bound());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    write_box_cache(out, box);
    if (!out) throw std::runtime_error("error writing cache file " + tmp.string());
  }
  fs::rename(tmp, path);
  return path.string();
}

// A box for (p, N): from the cache when a matching file exists, otherwise
// expanded and stored. `origin` says which happened.
template <CoefficientRing R>
CoeffBox<R> obtain_box(const CommonOptions& common, const MultiPoly<R>& p, unsigned N, json& origin) {
  const auto dir = cache_directory(common);
  if (dir) {
    const fs::path path = *dir / box_cache_filename(p, N);
    std::ifstream in(path);
    if (in) {
      try {
        auto box = read_box_cache<R>(in);
        if (box.bound() == N && box.denominator() == p) {
          origin = {{"cache", "hit"}, {"path", path.string()}};
          return box;
        }
      } catch (const std::exception&) {
        // unreadable or stale; recompute below
      }
    }
  }
  auto box = expand_reciprocal(p, N, box_options(common));
  origin = {{"cache", dir ? "stored" : "disabled"}};
  if (dir) origin["path"] = store_box(box, *dir);
  return box;
}

struct Scale {
  enum Kind { none, variables, terms } kind = none;
  Rational value = 1;
};

Scale parse_scale(const std::string& s) {
  if (s.empty()) return {};
  const std::string suffix = "-power";
  if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0)
    return {Scale::terms, parse_rational(s.substr(0, s.size() - suffix.size()))};
  return {Scale::variables, parse_rational(s)};
}

json scale_json(const Scale& s) {
  if (s.kind == Scale::none) return nullptr;
  return {{"kind", s.kind == Scale::terms ? "term-power" : "variables"}, {"value", to_string(s.value)}};
}

MultiPoly<Rational> scaled_denominator(const FamilySpec<Rational>& spec, const Scale& s) {
  auto p = spec.denominator();
  if (s.kind != Scale::variables) return p;
  const std::vector<Rational> factors(spec.dim, s.value);
  return scale_variables(p, std::span<const Rational>(factors));
}

SequenceWindow family_diagonal(const CommonOptions& common, const FamilySpec<Rational>& spec, unsigned N,
                               const Scale& scale, json& origin) {
  auto diag = extract_diagonal(obtain_box(common, scaled_denominator(spec, scale), N, origin));
  if (scale.kind == Scale::terms) diag = scale_terms(diag, scale.value);
  return diag;
}

// ---- expand ----------------------------------------------------------------

template <CoefficientRing R>
int expand_family(const CommonOptions& common, const ExpandOptions& o, const FamilySpec<R>& spec, Report& rep) {
  auto box = expand_reciprocal(spec.denominator(), o.N, box_options(common, o.symmetry));
  json& d = rep.data;
  d["family"] = family_json(spec, o.fam);
  d["N"] = o.N;
  d["storage"] = box.storage() == BoxStorage::symmetric ? "symmetric" : "full";
  d["entries"] = box.stored_entries();
  rep.text.push_back(family_line(spec));
  rep.text.push_back("N=" + std::to_string(o.N) + ", " + std::string(d["storage"]) +
                     " storage, stored entries: " + std::to_string(box.stored_entries()));
  if (const auto dir = cache_directory(common)) {
    d["cache_file"] = store_box(box, *dir);
    rep.text.push_back("cache: " + std::string(d["cache_file"]));
  }
  if (o.print) {
    rep.table.push_back({"index", "value"});
    json entries = json::array();
    for (unsigned t = 0; t < box.filled_layers(); ++t)
      for (const auto& n : box.layer(t)) {
        const std::string v = ring_string(box.stored_value(n));
        entries.push_back({{"index", n.e}, {"value", v}});
        rep.table.push_back({index_string(n), v});
        rep.text.push_back(index_string(n) + " " + v);
      }
    d["stored"] = entries;
  }

  int status = 0;
  if (o.check_positive) {
    const std::string where =
        "[0.." + std::to_string(o.N) + "]^" + std::to_string(spec.dim);
    std::optional<std::pair<ExponentVector, R>> bad;
    if constexpr (std::is_same_v<R, UniPoly>)
      bad = lambda_coefficient_check(box);
    else
      bad = first_nonpositive(box, true);
    json check = {{"passed", !bad}, {"region", where}};
    if (bad) {
      check["first_nonpositive"] = {{"index", bad->first.e}, {"value", ring_string(bad->second)}};
      rep.text.push_back("first nonpositive coefficient: " + index_string(bad->first) + " -> " +
                         ring_string(bad->second));
      status = 1;
    } else {
      rep.text.push_back(std::is_same_v<R, UniPoly>
                             ? "every coefficient in " + where + " is a nonzero lambda-polynomial with nonnegative coefficients"
                             : "no nonpositive coefficient in " + where);
    }
    d["check_positive"] = check;
  }
  return status;
}

// ---- diag ------------------------------------------------------------------

int diag_lambda(const CommonOptions& common, const DiagOptions& o, Report& rep) {
  if (!o.oracle.empty() || !o.scale.empty() || o.sign_scan)
    throw std::invalid_argument("--oracle, --scale and --sign-scan need a rational family (give --lambda)");
  auto spec = straub_lambda();
  json origin;
  auto values = strings(extract_diagonal_values(obtain_box(common, spec.denominator(), o.N, origin)));
  rep.data["family"] = family_json(spec, o.fam);
  rep.data["N"] = o.N;
  rep.data["box"] = origin;
  rep.data["diagonal"] = values;
  rep.text.push_back(join(values));
  rep.table.push_back({"n", "value"});
  for (std::size_t n = 0; n < values.size(); ++n) rep.table.push_back({std::to_string(n), values[n]});
  return 0;
}

// ---- recur -----------------------------------------------------------------

SequenceWindow load_sequence(const CommonOptions& common, const SequenceSource& s, json& meta) {
  if (!s.terms.empty()) {
    meta = {{"kind", "terms"}};
    return {0, parse_list(s.terms)};
  }
  if (!s.oracle.empty()) {
    if (s.count <= 0) throw std::invalid_argument("--oracle as a source needs --count");
    std::optional<Rational> a;
    if (!s.fam.a.empty()) a = parse_rational(s.fam.a);
    meta = {{"kind", "oracle"}, {"name", s.oracle}, {"count", s.count}};
    if (a) meta["a"] = to_string(*a);
    return oracle_sequence(s.oracle, s.count, a);
  }
  if (s.fam.family.empty() && s.fam.coeffs.empty())
    throw std::invalid_argument("give the sequence with --terms, --oracle or --family/--coeffs");
  const auto spec = rational_family(s.fam);
  const Scale scale = parse_scale(s.scale);
  json origin;
  auto seq = family_diagonal(common, spec, s.N, scale, origin);
  meta = {{"kind", "diagonal"}, {"family", family_json(spec, s.fam)}, {"N", s.N}, {"scale", scale_json(scale)}, {"box", origin}};
  return seq;
}

json recurrence_json(const PRecurrence& rec) {
  json coeffs = json::array();
  for (const auto& p : rec.coefficients()) coeffs.push_back(ring_to_json(p));
  return {{"order", rec.order()}, {"degree", rec.degree()}, {"text", to_string(rec)}, {"coefficients", coeffs}};
}

PRecurrence builtin_recurrence(const RecurOptions& o) {
  std::optional<Rational> a;
  if (!o.src.fam.a.empty()) a = parse_rational(o.src.fam.a);
  return recurrences::by_name(o.builtin, a);
}

}  // namespace

int run_expand(const CommonOptions& common, const ExpandOptions& o) {
  Report rep;
  rep.data = base_report("expand");
  int status = is_lambda_family(o.fam) ? expand_family(common, o, straub_lambda(), rep)
                                       : expand_family(common, o, rational_family(o.fam), rep);
  emit(std::cout, rep, common.format);
  return status;
}

int run_diag(const CommonOptions& common, const DiagOptions& o) {
  Report rep;
  rep.data = base_report("diag");
  if (is_lambda_family(o.fam)) {
    int status = diag_lambda(common, o, rep);
    emit(std::cout, rep, common.format);
    return status;
  }
  const auto spec = rational_family(o.fam);
  const Scale scale = parse_scale(o.scale);
  json origin;
  const auto diag = family_diagonal(common, spec, o.N, scale, origin);
  const auto values = strings(diag.values);

  json& d = rep.data;
  d["family"] = family_json(spec, o.fam);
  d["N"] = o.N;
  d["scale"] = scale_json(scale);
  d["box"] = origin;
  d["diagonal"] = values;
  rep.text.push_back(join(values));

  int status = 0;
  std::vector<std::string> expected;
  if (!o.oracle.empty()) {
    std::optional<Rational> a;
    if (!o.fam.a.empty()) a = parse_rational(o.fam.a);
    const auto oracle = oracle_sequence(o.oracle, diag.size(), a);
    expected = strings(oracle.values);
    json check = {{"name", o.oracle}, {"terms", diag.size()}};
    auto it = std::mismatch(diag.values.begin(), diag.values.end(), oracle.values.begin());
    if (it.first == diag.values.end()) {
      check["passed"] = true;
      rep.text.push_back("oracle " + o.oracle + ": match for n=0.." + std::to_string(o.N));
    } else {
      const auto n = static_cast<long>(it.first - diag.values.begin());
      check["passed"] = false;
      check["first_mismatch"] = {{"n", n}, {"diagonal", to_string(*it.first)}, {"oracle", to_string(*it.second)}};
      rep.text.push_back("oracle " + o.oracle + ": MISMATCH at n=" + std::to_string(n) + " (diagonal " +
                         to_string(*it.first) + ", oracle " + to_string(*it.second) + ")");
      status = 1;
    }
    d["oracle"] = check;
  }
  if (o.sign_scan) {
    const auto scan = sequence_sign_scan(diag);
    json j = {{"scanned", scan.scanned}, {"passed", !scan.first_nonpositive}};
    if (scan.first_nonpositive) j["first_nonpositive"] = *scan.first_nonpositive;
    if (scan.first_negative) j["first_negative"] = *scan.first_negative;
    d["sign_scan"] = j;
    rep.text.push_back(scan.first_nonpositive ? "first nonpositive term at n=" + std::to_string(*scan.first_nonpositive)
                                              : "all " + std::to_string(scan.scanned) + " terms positive");
    if (scan.first_nonpositive) status = 1;
  }

  rep.table.push_back({"n", "value"});
  if (!expected.empty()) rep.table[0].push_back("oracle");
  for (std::size_t n = 0; n < values.size(); ++n) {
    rep.table.push_back({std::to_string(n), values[n]});
    if (!expected.empty()) rep.table.back().push_back(expected[n]);
  }
  emit(std::cout, rep, common.format);
  return status;
}

int run_recur(const CommonOptions& common, const RecurOptions& o) {
  Report rep;
  rep.data = base_report("recur");
  json& d = rep.data;
  d["mode"] = o.mode;
  int status = 0;

  if (o.mode == "guess") {
    json meta;
    const auto seq = load_sequence(common, o.src, meta);
    d["source"] = meta;
    d["terms"] = seq.size();
    d["max_order"] = o.max_order;
    d["max_degree"] = o.max_degree;
    auto rec = recurrence_guess(seq, o.max_order, o.max_degree);
    if (rec) {
      d["recurrence"] = recurrence_json(*rec);
      rep.text.push_back("order " + std::to_string(rec->order()) + ", degree " + std::to_string(rec->degree()) +
                         " (from " + std::to_string(seq.size()) + " terms)");
      rep.text.push_back(to_string(*rec));
    } else {
      d["recurrence"] = nullptr;
      rep.text.push_back("no recurrence with order <= " + std::to_string(o.max_order) + " and degree <= " +
                         std::to_string(o.max_degree));
      status = 1;
    }
  } else if (o.mode == "check") {
    if (o.builtin.empty()) throw std::invalid_argument("recur check needs --builtin");
    const auto rec = builtin_recurrence(o);
    json meta;
    const auto seq = load_sequence(common, o.src, meta);
    d["source"] = meta;
    d["recurrence"] = recurrence_json(rec);
    const auto fail = recurrence_check(rec, seq);
    d["passed"] = !fail;
    if (fail) {
      d["first_failure"] = {{"n", fail->index}, {"residual", to_string(fail->residual)}};
      rep.text.push_back("fail at n=" + std::to_string(fail->index) + " (residual " + to_string(fail->residual) + ")");
      status = 1;
    } else {
      rep.text.push_back("pass (" + std::to_string(seq.size()) + " terms)");
    }
  } else if (o.mode == "extend") {
    if (o.builtin.empty()) throw std::invalid_argument("recur extend needs --builtin");
    if (o.src.terms.empty()) throw std::invalid_argument("recur extend needs --terms with the initial values");
    const auto rec = builtin_recurrence(o);
    const SequenceWindow init{0, parse_list(o.src.terms)};
    const auto seq = recurrence_extend(rec, init, o.upto);
    const auto values = strings(seq.values);
    d["recurrence"] = recurrence_json(rec);
    d["initial"] = strings(init.values);
    d["upto"] = o.upto;
    d["values"] = values;
    rep.text.push_back(join(values));
    rep.table.push_back({"n", "value"});
    for (std::size_t n = 0; n < values.size(); ++n) rep.table.push_back({std::to_string(n), values[n]});
  } else if (o.mode == "charpoly") {
    std::optional<PRecurrence> rec;
    if (!o.builtin.empty()) {
      rec = builtin_recurrence(o);
    } else {
      json meta;
      const auto seq = load_sequence(common, o.src, meta);
      d["source"] = meta;
      rec = recurrence_guess(seq, o.max_order, o.max_degree);
      if (!rec) throw std::runtime_error("no recurrence found to take the characteristic polynomial of");
    }
    const UniPoly chi = characteristic_polynomial(*rec);
    const auto roots = sturm_isolate(chi);
    long real_with_mult = 0;
    json jroots = json::array();
    std::vector<std::string> root_text;
    for (const auto& iv : roots) {
      real_with_mult += iv.multiplicity;
      const auto fine = refine_root(chi, iv, make_rational(1, 1000000000000L));
      jroots.push_back({{"lo", to_string(iv.lo)},
                        {"hi", to_string(iv.hi)},
                        {"multiplicity", iv.multiplicity},
                        {"approx", fine.approx()}});
      std::ostringstream os;
      os << fine.approx();
      root_text.push_back(os.str() + (iv.multiplicity > 1 ? " (x" + std::to_string(iv.multiplicity) + ")" : ""));
    }
    const bool complex_roots = real_with_mult < chi.degree();
    d["recurrence"] = recurrence_json(*rec);
    d["charpoly"] = to_string(chi, "x");
    d["charpoly_coefficients"] = ring_to_json(chi);
    d["real_roots"] = jroots;
    d["complex_roots"] = complex_roots;
    rep.text.push_back("characteristic polynomial: " + to_string(chi, "x"));
    rep.text.push_back("real roots: " + (root_text.empty() ? std::string("none") : join(root_text, ", ")));
    rep.text.push_back(std::string("complex roots: ") + (complex_roots ? "yes" : "no"));
  } else {
    throw std::invalid_argument("unknown recur mode '" + o.mode + "'");
  }
  emit(std::cout, rep, common.format);
  return status;
}

int run_identity(const CommonOptions& common, const IdentityOptions& o) {
  BoxOptions box = box_options(common);
  const auto r = verify_named_identity(o.name, o.M, box);
  Report rep;
  rep.data = base_report("identity");
  json& d = rep.data;
  d["name"] = r.name;
  d["description"] = r.description;
  d["M"] = r.order;
  d["passed"] = r.passed();
  if (r.mismatch)
    d["first_mismatch"] = {
        {"index", r.mismatch->index}, {"lhs", to_string(r.mismatch->lhs)}, {"rhs", to_string(r.mismatch->rhs)}};
  json extras = json::object();
  std::vector<std::pair<std::string, UniSeries>> shown;
  for (const auto& [name, series] : r.extras) shown.emplace_back(name, series.truncate(std::min(series.order(), r.order)));
  for (const auto& [name, series] : shown) extras[name] = strings(series.coefficients());
  if (!extras.empty()) d["series"] = extras;

  rep.text.push_back("identity " + r.name + ": " + r.description);
  if (r.passed())
    rep.text.push_back("pass to order " + std::to_string(r.order));
  else
    rep.text.push_back("FAIL at z^" + std::to_string(r.mismatch->index) + ": lhs " + to_string(r.mismatch->lhs) +
                       ", rhs " + to_string(r.mismatch->rhs));
  for (const auto& [name, series] : shown) rep.text.push_back(name + ": " + join(strings(series.coefficients())));
  emit(std::cout, rep, common.format);
  return r.passed() ? 0 : 1;
}

int run_geometry(const CommonOptions& common, const GeometryOptions& o) {
  Report rep;
  rep.data = base_report("geometry");
  json& d = rep.data;
  d["mode"] = o.mode;

  if (o.mode == "point") {
    const auto spec = rational_family(o.fam);
    d["family"] = family_json(spec, o.fam);
    rep.text.push_back(family_line(spec));
    if (spec.dim == 2 || spec.dim == 3) {
      const auto cr = critical_points_diag(spec);
      d["report"] = crit_report_to_json(cr);
      rep.text.push_back("canonical coeffs " + join(strings(cr.family.coeffs)) + " (scale " + to_string(cr.scale) + ")");
      rep.text.push_back(std::string(cr.smooth ? "smooth" : "on the nonsmooth locus") + ", locus value " +
                         to_string(cr.locus_value));
      if (cr.cubic_discriminant) rep.text.push_back("cubic discriminant " + to_string(*cr.cubic_discriminant));
      for (const auto& k : cr.classes)
        rep.text.push_back(k.kind + " critical points: " + std::to_string(k.positive_count) + " positive" +
                           (k.note.empty() ? "" : " (" + k.note + ")"));
      rep.text.push_back("verdict " + to_string(cr.verdict) + ": " + cr.reason);
    } else if (spec.dim == 4) {
      const auto [canon, scale] = canonicalize(spec);
      const auto loc = nonsmooth_locus_4d(canon.coeffs[2], canon.coeffs[3], canon.coeffs[4]);
      d["canonical_coeffs"] = strings(canon.coeffs);
      d["scale"] = to_string(scale);
      d["locus"] = {{"factor1", to_string(loc.factor1)},
                    {"factor2", to_string(loc.factor2)},
                    {"member", loc.member},
                    {"on_nonsmooth_family", loc.on_nonsmooth_family}};
      d["note"] = "critical points are computed for d <= 3 only";
      rep.text.push_back("canonical coeffs " + join(strings(canon.coeffs)) + " (scale " + to_string(scale) + ")");
      rep.text.push_back("locus factors " + to_string(loc.factor1) + ", " + to_string(loc.factor2) + ": " +
                         (loc.member ? "member" : "not a member") +
                         (loc.on_nonsmooth_family ? ", on the nonsmooth family" : ""));
    } else {
      throw std::invalid_argument("unsupported dimension d=" + std::to_string(spec.dim) +
                                  " (critical points need d <= 3, loci d <= 4)");
    }
  } else if (o.mode == "grid") {
    if (o.a_range.empty() || o.b_range.empty()) throw std::invalid_argument("geometry grid needs --a and --b ranges");
    const auto ar = parse_range(o.a_range);
    const auto br = parse_range(o.b_range);
    const auto rows = scan_grid_3d(ar, br, std::max(1u, common.workers));
    d["family"] = "hab";
    d["a_range"] = o.a_range;
    d["b_range"] = o.b_range;
    json jrows = json::array();
    rep.table.push_back({"a", "b", "locus_value", "member", "positive_count", "verdict"});
    for (const auto& row : rows) {
      const std::string verdict = row.verdict ? to_string(*row.verdict) : "locus-member";
      jrows.push_back({{"a", to_string(row.a)},
                       {"b", to_string(row.b)},
                       {"locus_value", to_string(row.locus_value)},
                       {"member", row.member},
                       {"positive_count", row.positive_count},
                       {"verdict", verdict}});
      rep.table.push_back({to_string(row.a), to_string(row.b), to_string(row.locus_value), row.member ? "1" : "0",
                           std::to_string(row.positive_count), verdict});
    }
    d["rows"] = jrows;
    for (const auto& row : rep.table) {
      std::vector<std::string> cells;
      for (const auto& c : row) cells.push_back(csv_escape(c));
      rep.text.push_back(join(cells));
    }
  } else if (o.mode == "bisect") {
    FamilyOptions base = o.fam;
    if (base.family.empty() && base.coeffs.empty()) base.family = "h0b";
    if (o.param != "a" && o.param != "b" && o.param != "c")
      throw std::invalid_argument("--param must be a, b or c");
    auto make = [&](const Rational& v) {
      FamilyOptions f = base;
      (o.param == "a" ? f.a : o.param == "b" ? f.b : f.c) = to_string(v);
      return rational_family(f);
    };
    const Rational lo = parse_rational(o.lo), hi = parse_rational(o.hi), prec = parse_rational(o.prec);
    const auto t = box_positivity_threshold(make, lo, hi, o.N, prec, box_options(common));
    d["family"] = family_json(make(t.lo), base);
    d["family"]["name"] = make(t.lo).name;
    d["param"] = o.param;
    d["N"] = o.N;
    d["precision"] = to_string(prec);
    d["positive_at"] = to_string(t.lo);
    d["not_positive_at"] = to_string(t.hi);
    d["steps"] = t.steps;
    d["approx"] = {t.lo.get_d(), t.hi.get_d()};
    std::ostringstream os;
    os << "N=" << o.N << " box threshold in " << o.param << ": positive at " << to_string(t.lo) << " (" << t.lo.get_d()
       << "), not positive at " << to_string(t.hi) << " (" << t.hi.get_d() << "), " << t.steps << " steps";
    rep.text.push_back(os.str());
  } else {
    throw std::invalid_argument("unknown geometry mode '" + o.mode + "'");
  }
  emit(std::cout, rep, common.format);
  return 0;
}

}  // namespace diagonalis::cli
