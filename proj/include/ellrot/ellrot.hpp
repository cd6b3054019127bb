// ellrot.hpp
// Umbrella header: rotations and reflections of ellipsoids a1 x^2 + ... = r
// under the scalar product B(u,w) = sum a_i u_i w_i, built four ways
// (exponential, Cayley, reflection pairs, elliptic quaternions).

#pragma once

#include "ellrot/bmatrix.hpp"
#include "ellrot/cayley.hpp"
#include "ellrot/error.hpp"
#include "ellrot/householder.hpp"
#include "ellrot/mat.hpp"
#include "ellrot/pipeline.hpp"
#include "ellrot/quaternion.hpp"
#include "ellrot/rodrigues.hpp"
#include "ellrot/space.hpp"
