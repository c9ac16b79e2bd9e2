#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kr/cartan.hpp"
#include "kr/shapes.hpp"

namespace kr {

// Letters are encoded as signed bytes: i for unbarred, -i for barred, and 0
// for the middle letter of type B.
using Letter = int8_t;

// Single-letter crystal maps for B(omega_1). Returns 0 on annihilation; the
// special value kNoLetter marks "no result" distinctly from the 0 letter.
constexpr int kNoLetter = 127;

int f_letter(const ClassicalType& t, int color, int letter);
int e_letter(const ClassicalType& t, int color, int letter);
int eps_letter(const ClassicalType& t, int color, int letter);
int phi_letter(const ClassicalType& t, int color, int letter);
std::vector<int> all_letters(const ClassicalType& t);
std::vector<int> letter_weight(const ClassicalType& t, int letter);  // GL vector
std::string letter_str(int letter);

// One tensor slot: a tableau of some shape filled with letters (row-major).
// An empty shape is the unique element of B(0).
struct Slot {
    Partition shape;
    std::vector<Letter> letters;  // row-major, sum(shape) entries

    Letter at(int row, int col) const;  // 1-based
    void set(int row, int col, Letter v);
    bool operator==(const Slot& o) const { return shape == o.shape && letters == o.letters; }
};

Slot highest_weight_tableau(const Partition& shape);  // column c filled 1..h
Slot single_row_slot(const std::vector<int>& letters);
Slot single_letter_slot(int letter);

// A crystal element: an ordered list of tensor slots.
struct Element {
    std::vector<Slot> slots;

    bool operator==(const Element& o) const { return slots == o.slots; }
    std::string key() const;           // canonical encoding
    std::string pretty() const;        // human-readable
    std::vector<int> gl_weight(int n) const;
};

// Box iteration order: slots left to right; within a tableau columns right to
// left, each column top to bottom.
struct BoxRef {
    int slot;
    int row;  // 1-based
    int col;  // 1-based
};
std::vector<BoxRef> reading_order(const Element& b);

// Signature-rule crystal operators for classical colors.
std::optional<Element> apply_f(const ClassicalType& t, int color, const Element& b);
std::optional<Element> apply_e(const ClassicalType& t, int color, const Element& b);
int eps_classical(const ClassicalType& t, int color, const Element& b);
int phi_classical(const ClassicalType& t, int color, const Element& b);

// An explicit finite crystal graph over colors 0..top (color 0 edges may be
// absent). Vertices are sorted by canonical key.
class CrystalGraph {
public:
    // Generates the closure of the seeds under apply_e/apply_f for the given
    // classical colors. max_vertices guards runaway generation.
    static CrystalGraph generate(const ClassicalType& t, const std::vector<Element>& seeds,
                                 const std::vector<int>& colors, size_t max_vertices = 4000000);

    const ClassicalType& type() const { return type_; }
    int rank() const { return type_.n; }
    const std::vector<int>& colors() const { return colors_; }

    int size() const { return static_cast<int>(verts_.size()); }
    const Element& element(int v) const { return verts_[v]; }
    int index_of(const Element& b) const;  // -1 if absent
    int index_of_key(const std::string& key) const;

    int f(int color, int v) const { return fEdge_[color][v]; }
    int e(int color, int v) const { return eEdge_[color][v]; }
    void set_zero_edges(const std::vector<int>& e0, const std::vector<int>& f0);
    bool has_zero_edges() const { return has_zero_; }

    int eps(int color, int v) const;  // string length up
    int phi(int color, int v) const;  // string length down
    const std::vector<int>& weight(int v) const { return weights_[v]; }

    // Vertices with e_i = 0 for all listed colors.
    std::vector<int> highest_vertices(const std::vector<int>& colors) const;
    std::vector<int> highest_vertices(const std::vector<int>& colors,
                                      const std::vector<int>& weight) const;
    // Connected component of v using the listed colors (sorted vertex ids).
    std::vector<int> component(const std::vector<int>& colors, int v) const;
    bool connected(const std::vector<int>& colors) const;

    std::vector<int> classical_colors() const;           // 1..top
    std::vector<int> all_colors_with_zero() const;       // 0..top

private:
    ClassicalType type_{Family::A, 2};
    std::vector<int> colors_;
    std::vector<Element> verts_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> fEdge_, eEdge_;  // [color][v]
    std::vector<std::vector<int>> weights_;
    bool has_zero_ = false;
};

// The crystal of B(omega_1) as a graph (mostly for tests).
CrystalGraph vector_crystal(const ClassicalType& t);

// Generate the irreducible classical crystal B(shape).
CrystalGraph classical_crystal(const ClassicalType& t, const Partition& shape,
                               size_t max_vertices = 4000000);

}  // namespace kr
