#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "khv/f2.hpp"
#include "khv/laurent.hpp"

namespace khv {

struct GradedGen {
  int h = 0;     // homological grading
  int q = 0;     // quantum grading
  int filt = 0;  // filtration value
};

// Bigraded dimension table keyed by (h, q).
struct BigradedDims {
  std::map<std::pair<int, int>, int> dims;

  void add(int h, int q, int n = 1);
  int at(int h, int q) const;
  int total() const;
  BigradedDims shifted(int dh, int dq) const;
  BigradedDims operator+(const BigradedDims& o) const;
  bool operator==(const BigradedDims& o) const { return dims == o.dims; }
  // Sum of (-1)^h q^q over entries.
  LaurentPoly graded_euler() const;
  // Poincare polynomial in t (homological) and q.
  std::string poincare() const;
  std::string str() const;
};

// A bigraded chain complex over GF(2) with a filtration value per generator.
// The differential is stored column-sparse: d_cols[src] lists targets.
class FilteredComplex {
public:
  std::vector<GradedGen> gens;
  std::vector<std::vector<std::int32_t>> d_cols;

  std::size_t size() const { return gens.size(); }
  void resize(std::size_t n) {
    gens.resize(n);
    d_cols.resize(n);
  }
  void add_entry(std::int32_t src, std::int32_t tgt) { d_cols[src].push_back(tgt); }
  void sort_entries();

  F2Vec apply_d(const F2Vec& v) const;

  bool d_preserves_q() const;
  bool d_h_step_one() const;
  // True when d never decreases the filtration value; min_step receives the
  // smallest filtration step among nonzero entries (0 when d = 0).
  bool d_filtration_ok(int* min_step = nullptr) const;
  // A (src, tgt-of-d2) witness pair if d*d != 0.
  std::optional<std::pair<int, int>> d_squared_witness() const;
  // Throws std::invalid_argument with the witness if d^2 != 0.
  void check_valid() const;

  BigradedDims chain_dims() const;
};

// Dimensions of homology. Blocks are (h, q) when d preserves q, else per h
// with q reported as 0. Requires an h-homogeneous differential (step one);
// filtered complexes with longer differentials are handled by the spectral
// page machinery instead.
BigradedDims homology(const FilteredComplex& c);

struct ChainMap {
  const FilteredComplex* src = nullptr;
  const FilteredComplex* tgt = nullptr;
  std::vector<std::vector<std::int32_t>> cols;

  static ChainMap zero(const FilteredComplex& s, const FilteredComplex& t);
  static ChainMap identity(const FilteredComplex& c);

  F2Vec apply(const F2Vec& v) const;
  void add_entry(std::int32_t s, std::int32_t t) { cols[s].push_back(t); }
  bool commutes_with_d() const;
  // (dh, dq) when every entry has the same bidegree; nullopt otherwise
  // (or when the map is zero).
  std::optional<std::pair<int, int>> bidegree() const;
  std::optional<int> h_degree() const;  // nullopt if mixed or zero map
  std::optional<int> q_degree() const;
  ChainMap compose_after(const ChainMap& inner) const;  // this(inner(x))
  ChainMap operator+(const ChainMap& o) const;
  bool operator==(const ChainMap& o) const;
  F2Matrix dense() const;
};

// cone(f): source generators first (with their stored gradings), then target;
// differential [[d_src, 0], [f, d_tgt]]. The caller pre-shifts gradings so
// that f has bidegree (+1, 0); throws if f is not a chain map of that degree.
FilteredComplex cone(const ChainMap& f);
FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b);
FilteredComplex shift(const FilteredComplex& c, int dh, int dq, int dfilt = 0);
FilteredComplex direct_sum(const FilteredComplex& a, const FilteredComplex& b);

// Deterministic homology bases per block: boundaries first, then
// representatives extending them to the cycle space (first-pivot order).
class HomologyData {
public:
  using Key = std::pair<int, int>;

  explicit HomologyData(const FilteredComplex& c);

  struct Block {
    std::vector<std::int32_t> gen_idx;  // ascending global indices
    std::vector<F2Vec> boundaries;      // block coordinates
    std::vector<F2Vec> reps;            // block coordinates
    std::unique_ptr<F2Solver> membership;  // columns [boundaries | reps]
  };

  const FilteredComplex* complex() const { return c_; }
  bool bigraded() const { return bigraded_; }
  BigradedDims dims() const;
  const std::map<Key, Block>& blocks() const { return blocks_; }

  // Matrix of the induced map on homology per source block (rows indexed by
  // target reps, columns by source reps). f must be a chain map homogeneous
  // of some bidegree between the two underlying complexes.
  std::map<Key, F2Matrix> induced(const ChainMap& f, const HomologyData& target) const;

  // Everything below treats a block-indexed matrix family as one map.
  static bool is_zero(const std::map<Key, F2Matrix>& m);
  static bool is_identity(const HomologyData& h, const std::map<Key, F2Matrix>& m);
  bool induced_isomorphism(const ChainMap& f, const HomologyData& target) const;
  static std::map<Key, F2Matrix> compose(const std::map<Key, F2Matrix>& outer,
                                         const std::map<Key, F2Matrix>& inner,
                                         std::pair<int, int> inner_bidegree);

  Key key_of_gen(int g) const;
  int block_pos(int g) const { return pos_in_block_[g]; }

private:
  const FilteredComplex* c_;
  bool bigraded_;
  std::map<Key, Block> blocks_;
  std::vector<int> pos_in_block_;
};

struct LesReport {
  bool composites_zero = true;
  bool ranks_exact = true;
  std::string detail;
  bool pass() const { return composites_zero && ranks_exact; }
};

// Exactness of the homology triangle of cone(f):
//   H(src) -f*-> H(tgt) -i*-> H(cone) -p*-> H(src)[1]
LesReport les_exactness(const ChainMap& f);

}  // namespace khv
