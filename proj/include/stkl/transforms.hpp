#pragma once

#include <string>
#include <vector>

#include "stkl/rational.hpp"
#include "stkl/steiner.hpp"
#include "stkl/tree.hpp"

namespace stkl {

enum class SigmaVariant { plain, diametrical, leaf, degree };

std::string sigma_variant_name(SigmaVariant v);

enum class SigmaPart : unsigned char { Y, P, X, Z };

// A validated (Y, P, X, Z, v0, vs) decomposition of a tree along a path
// v0..vs whose interior vertices have degree 2. `part` labels every vertex:
// v0 and its side of the path is Y, interior path vertices are P, vs plus
// the branches kept at vs is X, and the branches to move are Z. In a
// forward form the Z branches hang at vs and move to v0; in an inverse form
// they hang at v0 and move to vs. eps_z is always the eccentricity the Z
// part has (or will have) when rooted at vs, so the defining condition is
// eps_y >= max(eps_x, eps_z) in both directions.
struct SigmaForm {
  Tree tree;
  int v0 = 0;
  int vs = 0;
  std::vector<int> path_vertices;  // v0 ... vs
  std::vector<SigmaPart> part;
  SigmaVariant variant = SigmaVariant::plain;
  bool relaxed = false;  // true iff the size condition |Y| >= |X| is waived
  bool inverse = false;
  std::vector<int> z_roots;  // ascending branch roots
  std::vector<int> x_roots;
  int eps_y = 0, eps_x = 0, eps_z = 0;
  int size_y = 0, size_x = 0;
};

// All decompositions for the requested variant, ordered by
// (v0, vs, Z-branch root set). With relaxed = false only forms satisfying
// |Y| >= |X| are returned; with relaxed = true the size condition is waived
// and forms that actually violate it carry relaxed = true.
std::vector<SigmaForm> find_sigma_forms(const Tree& t, SigmaVariant variant,
                                        bool relaxed);
std::vector<SigmaForm> find_sigma_inverse_forms(const Tree& t,
                                                SigmaVariant variant,
                                                bool relaxed = false);

// Move the Z branches from vs to v0 (or back, for the inverse). Both
// re-validate the form against its tree and throw InvalidFormError on any
// violated invariant.
Tree apply_sigma(const SigmaForm& f);
Tree apply_sigma_inverse(const SigmaForm& f);

std::string sigma_form_descriptor(const SigmaForm& f);

// A vertex w carrying two pendant arms, listed outward from w. For a bare
// path the single canonical site sits at the center vertex.
struct PQSite {
  Tree tree;
  int w = 0;
  std::vector<int> arm_p;
  std::vector<int> arm_q;
  bool base_nontrivial = false;  // w keeps a neighbor outside both arms
};

std::vector<PQSite> find_pq_sites(const Tree& t);

// Shift the tip of arm_q onto the end of arm_p: (p, q) -> (p+1, q-1).
Tree apply_pq(const PQSite& site);

struct RewriteStep {
  std::string op;
  std::string code;  // canonical code after the step
  Rational ebar;     // average (k,l)-eccentricity after the step
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
  std::vector<Tree> states;  // tree after each step, aligned with steps
  Tree terminal;
};

bool is_path_tree(const Tree& t);
bool is_star_tree(const Tree& t);

// Repeatedly apply the first diametrical form (first valid under the
// (v0, vs, Z-roots) order, skipping already-visited labeled trees) until the
// tree is a star resp. a path. The recorded averages are non-increasing
// toward the star and non-decreasing toward the path.
RewriteTrace normalize_to_star(const Tree& t, KLParams p);
RewriteTrace normalize_to_path(const Tree& t, KLParams p);

}  // namespace stkl
