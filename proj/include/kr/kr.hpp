#pragma once

#include <memory>
#include <mutex>

#include "kr/pm.hpp"
#include "kr/rowtab.hpp"

namespace kr {

// A Kirillov-Reshetikhin crystal B^{r,s} for the supported affine families:
//   kind empty -> A-type (zero arrows by rectangle promotion)
//   kind (1,1) -> D_n^(1)   (zero arrows through the diagram involution)
//   kind (2)   -> C_n^(1)   (transport through the D-type model)
//   kind (1)   -> D_{n+1}^(2) (rowwise doubling into the D-type model)
class KRCrystal {
public:
    // Builds (or fetches from the process-wide registry) the crystal.
    // with_affine=false builds only the classical graph plus the diagram
    // machinery (used for the internal D-type model).
    static std::shared_ptr<const KRCrystal> get(AffineType type, int r, int s,
                                                bool with_affine = true);

    AffineType type;
    int r = 0, s = 0;
    int level = 0;
    bool is_perfect = false;
    bool affine = false;

    CrystalGraph graph;
    std::vector<Partition> component_shapes;  // per component id
    std::vector<int> component_of;            // vertex -> component id
    std::vector<int> hw_of_component;         // component id -> hw vertex

    // Affine tables (empty when !affine).
    std::vector<int> e0, f0;      // vertex -> vertex or -1
    std::vector<int> eps0, phi0;  // string data at color 0
    std::vector<int> sigma_map;   // reversible kinds: the reversing automorphism

    // Diagram machinery (non-A kinds).
    std::vector<int> varsigma;  // kind (1,1) and its uses; identity-sized table

    int u_vertex = -1;       // unique vertex of weight s w_r
    int m_vertex = -1;       // eps = level L_0
    int mprime_vertex = -1;  // phi = level L_0

    int b_vertex(const Partition& lambda) const;     // I_0-highest of the component
    int bbar_vertex(const Partition& lambda) const;  // A-highest of weight bar(lambda)
    int component_index(const Partition& lambda) const;

    // Diagram <-> J-highest tables (J = {2..n}), merged over components.
    int phi_image(const PMDiagram& p) const;
    std::optional<PMDiagram> phi_preimage(int v) const;

    // Good arrows: i-arrows out of v (f-direction), 0-arrows need eps0 >= level.
    bool good_f_arrow(int v, int color) const;
    bool good_e_arrow(int v, int color) const;  // from v upward

    const RowTabEmbedding& rect_rowtab() const { return rect_rowtab_; }

private:
    KRCrystal() = default;
    static KRCrystal build(AffineType type, int r, int s, bool with_affine);
    void build_classical();
    void build_phi();
    void build_varsigma();
    void build_zero_arrows_promotion();
    void build_zero_arrows_oneone();
    void build_zero_arrows_transport();
    void finish_zero_arrows(std::vector<int> e0t);
    void find_special_elements();
    void build_sigma();

    std::unordered_map<std::string, int> phi_to_vertex_;
    std::unordered_map<int, PMDiagram> phi_from_vertex_;
    std::unordered_map<std::string, int> bbar_by_shape_;
    RowTabEmbedding rect_rowtab_;
    // Element-level tables of the rank-raised D-type model used by kinds
    // (2),(1): diagrams <-> model elements per outer shape (level 1) and per
    // J-highest element (level 2). Filled during construction only.
    struct ModelTables {
        std::unordered_map<std::string, Element> to_element;
        std::unordered_map<std::string, PMDiagram> to_diagram;
    };
    ClassicalType model_type() const { return {Family::D, type.n + 1}; }
    mutable std::unordered_map<std::string, ModelTables> model1_;
    mutable std::unordered_map<std::string, ModelTables> model2_;
    const ModelTables& model1(const Partition& outer) const;
    const ModelTables& model2(const Element& hw, const Partition& outer) const;
    Element model_varsigma(const Element& x) const;
    int transport_zero(int jhw_vertex, bool raising) const;
};

// Rectangle promotion for type A tableaux with letters 1..n (single slot).
Slot promote_rectangle(const Slot& t, int n);

// Raises v to the highest weight vertex for the given colors, recording the
// applied colors (in application order).
int raise_recording(const CrystalGraph& g, int v, const std::vector<int>& colors,
                    std::vector<int>* path);

// sigma(i) = n - i on the affine Dynkin diagram.
int sigma_color(const AffineType& t, int color);

// The three-step 180-degree rotation rule: from a level-1 diagram of
// B^{r,s} (kind (1,1)) to the row tableau of sigma(Phi(P)). Used as an
// independent oracle against the crystal-side computation.
Element rotation_rule_row_tableau(const PMDiagram& p, int n, int r, int s);

}  // namespace kr
