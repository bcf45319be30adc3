#include "weylkit/modular.hpp"

namespace weylkit {

// The G2, p = 2 dataset.  Serialized in the external file format so the two
// loading paths cannot drift; every row and fact carries the statement that
// backs it.
const char* builtin_dataset_text() {
    return R"json({
  "type": "G2",
  "p": 2,
  "decomposition": [
    {
      "lambda": [0, 0],
      "factors": [[[0, 0], 1]],
      "provenance": "Nabla(0,0) = k"
    },
    {
      "lambda": [0, 1],
      "factors": [[[0, 1], 1]],
      "provenance": "Nabla(0,1) = L(0,1): the adjoint module is simple at p = 2"
    },
    {
      "lambda": [1, 0],
      "factors": [[[1, 0], 1], [[0, 0], 1]],
      "provenance": "Nabla(1,0) has socle L(1,0) and Nabla(1,0)/L(1,0) = k at p = 2"
    },
    {
      "lambda": [1, 1],
      "factors": [[[1, 1], 1]],
      "provenance": "Nabla(1,1) = L(1,1) = St"
    }
  ],
  "tilting": [
    {
      "lambda": [1, 0],
      "factors": [[[1, 0], 1], [[0, 0], 1]],
      "provenance": "dim T(1,0) = 8: St x T(1,0)^[1] = St^8 as G1-modules"
    },
    {
      "lambda": [1, 1],
      "factors": [[[1, 1], 1]],
      "provenance": "T(1,1) = Delta(1,1) = St"
    }
  ],
  "facts": [
    {
      "kind": "iso",
      "subject": "St * k",
      "payload": {"pims": [[[1, 1], 1]]},
      "citation": "St x k = Q1(1,1) as G1-modules"
    },
    {
      "kind": "iso",
      "subject": "St * L(1,0)",
      "payload": {"pims": [[[0, 1], 1]]},
      "citation": "St x L(1,0) = Q1(0,1) as G1-modules"
    },
    {
      "kind": "iso",
      "subject": "St * L(0,1)",
      "payload": {"pims": [[[1, 0], 1], [[1, 1], 2]]},
      "citation": "St x L(0,1) = Q1(1,0) + St^2 as G1-modules"
    },
    {
      "kind": "iso",
      "subject": "St * St",
      "payload": {"pims": [[[0, 0], 1], [[0, 1], 2], [[1, 1], 16]]},
      "citation": "St x St = Q1(0,0) + Q1(0,1)^2 + St^16 as G1-modules"
    },
    {
      "kind": "iso",
      "subject": "T(2,1)",
      "payload": {"pims": [[[0, 1], 1]]},
      "citation": "T(2,1) = Q1(0,1) as G-modules"
    },
    {
      "kind": "iso",
      "subject": "T(1,2)",
      "payload": {"pims": [[[1, 0], 1]]},
      "citation": "T(1,2) = Q1(1,0) as G-modules"
    },
    {
      "kind": "ext1_dim",
      "subject": "L(1,0)",
      "payload": {"other": "L(0,1)", "dim": 0},
      "citation": "Ext1_G1(L(1,0), L(0,1)) = 0"
    },
    {
      "kind": "ext1_dim",
      "subject": "L(0,1)",
      "payload": {"other": "L(0,1)", "dim": 0},
      "citation": "Ext1_G1(L(0,1), L(0,1)) = 0"
    },
    {
      "kind": "ext1_dim",
      "subject": "k",
      "payload": {"other": "L(0,1)", "dim": 7, "g_structure": "Nabla(1,0)^[1]"},
      "citation": "Ext1_G1(k, L(0,1)) = Nabla(1,0)^[1] as G-modules"
    },
    {
      "kind": "head",
      "subject": "Nabla(0,0)",
      "payload": ["k"],
      "citation": "Nabla(0,0) = k is simple"
    },
    {
      "kind": "head",
      "subject": "Nabla(1,0)",
      "payload": ["k"],
      "citation": "Nabla(1,0)/L(1,0) = k"
    },
    {
      "kind": "head",
      "subject": "Nabla(0,1)",
      "payload": ["L(0,1)"],
      "citation": "Nabla(0,1) = L(0,1) is simple"
    },
    {
      "kind": "head",
      "subject": "Nabla(1,1)",
      "payload": ["L(1,1)"],
      "citation": "Nabla(1,1) = St is simple"
    },
    {
      "kind": "head",
      "subject": "Nabla(2,1)",
      "payload": ["L(0,1)"],
      "citation": "Nabla(2,1)/rad Nabla(2,1) = L(0,1)"
    },
    {
      "kind": "radical_layer",
      "subject": "Nabla(2,1)",
      "payload": {"layer": 2, "factors": ["L(1,0)^[1]"]},
      "citation": "rad Nabla(2,1)/rad^2 Nabla(2,1) = L(1,0)^[1]"
    },
    {
      "kind": "head",
      "subject": "Nabla(0,2)",
      "payload": ["L(0,1)"],
      "citation": "Nabla(0,2) is uniserial with Nabla(0,2)/rad Nabla(0,2) = L(0,1)"
    },
    {
      "kind": "radical_layer",
      "subject": "Nabla(0,2)",
      "payload": {"layer": 2, "factors": ["L(1,0)^[1]"]},
      "citation": "Nabla(0,2) is uniserial with rad Nabla(0,2)/rad^2 Nabla(0,2) = L(1,0)^[1]"
    },
    {
      "kind": "hom_dim",
      "subject": "St",
      "payload": {"other": "St * (L(0,1) + L(1,0)^[1])", "dim": 1},
      "citation": "Hom_G(St, St x M) = k for M = L(0,1) + L(1,0)^[1]"
    },
    {
      "kind": "socle_series_G1",
      "subject": "St * St",
      "payload": {"summands": [["k", 1], ["L(0,1)", 2], ["St * T(1,0)^[1]", 2]]},
      "citation": "soc_G1(St x St) = k + L(0,1)^2 + (St x T(1,0)^[1])^2"
    },
    {
      "kind": "socle",
      "subject": "Delta(2,2)",
      "payload": ["k", "L(0,1)"],
      "citation": "soc_G Delta(2,2) = k + L(0,1)"
    }
  ]
}
)json";
}

}  // namespace weylkit
