#ifndef SPREADCODE_SPREADCODE_HPP
#define SPREADCODE_SPREADCODE_HPP

#include "spreadcode/channel.hpp"
#include "spreadcode/decoder.hpp"
#include "spreadcode/ext_field.hpp"
#include "spreadcode/matrix.hpp"
#include "spreadcode/nondiagonal.hpp"
#include "spreadcode/op_counter.hpp"
#include "spreadcode/polynomial.hpp"
#include "spreadcode/prime_field.hpp"
#include "spreadcode/spread_code.hpp"
#include "spreadcode/text_format.hpp"

#endif  // SPREADCODE_SPREADCODE_HPP
