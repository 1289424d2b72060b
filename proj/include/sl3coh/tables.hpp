#pragma once

// Loads the shipped table data: Frobenius-kernel cohomology values, the Ext^1
// pattern families (with the errata overlay), and the classification families.
// Tables are immutable after load; lookups are safe to run concurrently.

#include "sl3coh/module_expr.hpp"
#include "sl3coh/pattern.hpp"
#include "sl3coh/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sl3coh {

// regime is one of "p>3", "p=3", "p=2", "any".
bool regime_applies(const std::string& regime, long long p);

struct G1Entry {
    std::string regime;
    int degree = 0;
    WeightPattern weight;
    ValuePattern value;
    bool generated_dual = false; // produced by dual closure, not read from file
    bool replaced_by_errata = false;
    std::string id;
};

// H^i(G1, L(a,b))^[-1] for i in {0,1,2}. Degree 0 is hard-coded (K exactly at
// the zero weight); degrees 1 and 2 come from the data file, closed under
// duality at load time.
class G1Table {
  public:
    static G1Table load(const std::string& path, const std::string& overlay_path,
                        bool apply_errata);

    ModuleExpr value(long long p, int degree, const Weight& lam0,
                     std::string* row_id = nullptr) const;

    const std::vector<G1Entry>& entries() const { return entries_; }

  private:
    std::vector<G1Entry> entries_;
};

struct Ext1Entry {
    std::string regime;
    Weight row;
    std::string pattern_text;        // effective text (post-overlay when applied)
    std::optional<MuPattern> mu;     // empty when the text does not parse
    std::string defect;              // parse failure note
    bool replaced_by_errata = false;
    std::string id;
};

struct Ext1Match {
    const Ext1Entry* entry = nullptr;
    long long i = -1;          // resolved free index, -1 when not applicable
    bool i_irrelevant = false; // every free-positioned factor collapsed
};

struct Ext1Result {
    int dim = 0;
    std::vector<Ext1Match> matches;
};

// Ext^1_G(row, mu) for row in {(0,0),(1,0),(0,1),(1,1)}; the (0,0) row is
// H^1(G, mu). Non-zero values are one-dimensional, so the result is 0 or 1
// together with the matched family.
class Ext1Table {
  public:
    static Ext1Table load(const std::string& table_path, const std::string& overlay_path,
                          bool apply_errata);

    Ext1Result ext1_dim(long long p, const Weight& row, const Decomposition& mu) const;
    int h1_g(long long p, const Decomposition& mu) const;

    const std::vector<Ext1Entry>& entries() const { return entries_; }

    // Entries whose dual (dualized row and factors) is missing from the same
    // regime, plus unparseable entries. Empty with the overlay applied.
    std::vector<std::string> defects() const;

  private:
    void build_index();

    std::vector<Ext1Entry> entries_;
    // Applicable entry positions by [regime class][row], regime classes being
    // p=2, p=3 and p>3.
    std::vector<std::size_t> index_[3][4];
};

struct TheoremFamily {
    int id = 0;
    MuPattern mu;
    std::string text;
};

class TheoremTable {
  public:
    static TheoremTable load(const std::string& path);
    const std::vector<TheoremFamily>& families() const { return families_; }

  private:
    std::vector<TheoremFamily> families_;
};

std::string default_data_dir();

struct TableSet {
    G1Table g1;
    Ext1Table ext1;
    TheoremTable theorem;
    bool errata_applied = true;
    std::string data_dir;

    static TableSet load(const std::string& dir, bool apply_errata = true);
    static TableSet load_default(bool apply_errata = true);
};

} // namespace sl3coh
