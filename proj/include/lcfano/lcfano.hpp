// lcfano.hpp
// Umbrella header pulling in the whole library.
#pragma once

#include "lcfano/barycentric.hpp"
#include "lcfano/decomposition.hpp"
#include "lcfano/errors.hpp"
#include "lcfano/extremal.hpp"
#include "lcfano/geometry.hpp"
#include "lcfano/json_io.hpp"
#include "lcfano/linalg.hpp"
#include "lcfano/optimizer.hpp"
#include "lcfano/rational.hpp"
#include "lcfano/sylvester.hpp"
#include "lcfano/verify.hpp"
