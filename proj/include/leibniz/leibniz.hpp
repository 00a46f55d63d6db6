#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/algebra_io.hpp"
#include "leibniz/blocks.hpp"
#include "leibniz/classifier.hpp"
#include "leibniz/form.hpp"
#include "leibniz/iso.hpp"
#include "leibniz/pencil.hpp"
