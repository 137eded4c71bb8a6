#pragma once

#include "qmf/cuntz.hpp"
#include "qmf/filterbank.hpp"
#include "qmf/io.hpp"
#include "qmf/laurent.hpp"
#include "qmf/measures.hpp"
#include "qmf/nadic.hpp"
#include "qmf/packets.hpp"
#include "qmf/pyramid.hpp"
#include "qmf/rational.hpp"
#include "qmf/step_function.hpp"
#include "qmf/word.hpp"
