#pragma once

#include "spaceforms/error.hpp"
#include "spaceforms/euclidean.hpp"
#include "spaceforms/hyperbolic.hpp"
#include "spaceforms/normal_form.hpp"
#include "spaceforms/numkit.hpp"
#include "spaceforms/orbit.hpp"
#include "spaceforms/segre.hpp"
#include "spaceforms/spherical.hpp"
#include "spaceforms/varieties.hpp"
