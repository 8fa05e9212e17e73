#pragma once

// Newton divided differences over exact rationals.

#include <vector>

#include "cattri/integer.hpp"

namespace cattri {

struct NewtonTableau {
    std::vector<Rat> nodes;
    std::vector<Rat> coefficients;  // coefficients[k] = divided difference f[x_0..x_k]

    // Evaluate the Newton-form interpolant at x.
    Rat eval(const Rat& x) const {
        Rat acc = 0;
        Rat basis = 1;
        for (std::size_t k = 0; k < coefficients.size(); ++k) {
            acc += coefficients[k] * basis;
            basis *= x - nodes[k];
        }
        return acc;
    }
};

inline NewtonTableau newton_coefficients(const std::vector<Rat>& nodes,
                                         const std::vector<Rat>& values) {
    if (nodes.empty() || nodes.size() != values.size())
        throw std::invalid_argument("newton_coefficients: need equally many nodes and values");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j])
                throw std::invalid_argument("newton_coefficients: repeated node");

    // column[j] holds f[x_j..x_{j+level}] as the table is folded in place
    std::vector<Rat> column = values;
    NewtonTableau t;
    t.nodes = nodes;
    t.coefficients.reserve(nodes.size());
    t.coefficients.push_back(column[0]);
    for (std::size_t level = 1; level < nodes.size(); ++level) {
        for (std::size_t j = 0; j + level < nodes.size(); ++j)
            column[j] = (column[j + 1] - column[j]) / (nodes[j + level] - nodes[j]);
        t.coefficients.push_back(column[0]);
    }
    return t;
}

}  // namespace cattri
