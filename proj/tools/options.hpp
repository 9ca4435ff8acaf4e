#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diagonalis::cli {

struct CommonOptions {
  std::string format = "text";  // json | csv | text
  std::string cache_dir;        // empty: $DIAGONALIS_CACHE, then .diagonalis-cache
  bool no_cache = false;
  unsigned workers = 1;
  std::uint64_t mem_limit = 100'000'000;  // stored coefficients
};

// Either a catalog name (plus parameters) or inline coefficients c_0..c_d.
struct FamilyOptions {
  std::string family;
  std::string coeffs;
  std::size_t d = 0;
  std::string a, b, c;
  std::string lambda;  // specializes StraubLambda when set
};

struct ExpandOptions {
  FamilyOptions fam;
  unsigned N = 0;
  bool check_positive = false;
  bool print = false;
  std::string symmetry = "auto";
};

struct DiagOptions {
  FamilyOptions fam;
  unsigned N = 0;
  std::string oracle;
  std::string scale;
  bool sign_scan = false;
};

// Where recur takes its terms from: --terms, a family diagonal, or an oracle.
struct SequenceSource {
  std::string terms;
  FamilyOptions fam;
  unsigned N = 0;
  std::string scale;
  std::string oracle;
  long count = 0;
};

struct RecurOptions {
  std::string mode;  // guess | check | extend | charpoly
  SequenceSource src;
  std::string builtin;
  int max_order = 3;
  int max_degree = 6;
  long upto = 0;
};

struct IdentityOptions {
  std::string name;
  int M = 0;
};

struct GeometryOptions {
  std::string mode;  // point | grid | bisect
  FamilyOptions fam;
  std::string a_range, b_range;
  std::string param = "b";
  std::string lo = "0", hi = "8";
  std::string prec = "1/64";
  unsigned N = 12;
};

int run_expand(const CommonOptions& common, const ExpandOptions& o);
int run_diag(const CommonOptions& common, const DiagOptions& o);
int run_recur(const CommonOptions& common, const RecurOptions& o);
int run_identity(const CommonOptions& common, const IdentityOptions& o);
int run_geometry(const CommonOptions& common, const GeometryOptions& o);

}  // namespace diagonalis::cli
