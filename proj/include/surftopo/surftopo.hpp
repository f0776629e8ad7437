#pragma once

#include "surftopo/catalog.hpp"
#include "surftopo/chord.hpp"
#include "surftopo/classification.hpp"
#include "surftopo/complex.hpp"
#include "surftopo/connectivity.hpp"
#include "surftopo/error.hpp"
#include "surftopo/json_io.hpp"
#include "surftopo/manifold3.hpp"
#include "surftopo/orientation.hpp"
#include "surftopo/rotation.hpp"
#include "surftopo/slw.hpp"
#include "surftopo/surface.hpp"
