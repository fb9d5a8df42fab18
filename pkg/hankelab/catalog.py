# Generated
#  by generate_catalog_module.py
#  from catalog.yaml
#  at 2026-10-19 14:02:11.418052

from collections import OrderedDict

FAMILIES = OrderedDict([('F1',
   {'letter': 'f',
    'jacobi': [0.0, 0.5, -0.5],
    'sigma': [1.0, 1.0],
    'shift': [1.0, 1.0],
    'lattice': 'odd',
    'reflected': True,
    'weight': '1',
    'first_point': 0,
    'first_eigen': 0,
    'mass': {'coef': 1.0, 'pi': 2.0, 'k': -1.0, 'K': -2.0, 'index': 1, 'nome': 1, 'sign': -1, 'damping': -1, 'zero_scale': 1.0},
    'generating': {'parity': 'odd', 'alternating': False, 'numerator': 'sinh', 'denominator': []},
    'asymptotic': {'factorial': 'even', 'trig': 'cos', 'root': 0, 'power': 0.5, 'coef': 1.0, 'kprime': -0.5, 'alternating': False, 'sign': 1}}),
  ('F2',
   {'letter': 'g',
    'jacobi': [1.0, 0.5, 0.5],
    'sigma': [2.0, 2.0],
    'shift': [4.0, 4.0],
    'lattice': 'even',
    'reflected': True,
    'weight': '1',
    'first_point': 1,
    'first_eigen': 1,
    'mass': {'coef': 1.0, 'pi': 4.0, 'k': -2.0, 'K': -4.0, 'index': 3, 'nome': 1, 'sign': -1, 'damping': -1, 'zero_scale': 1.0},
    'generating': {'parity': 'odd', 'alternating': False, 'numerator': 'sinh', 'denominator': ['cn', 'dn']},
    'asymptotic': {'factorial': 'odd', 'trig': 'sin', 'root': -1, 'power': 0.5, 'coef': 1.0, 'kprime': -0.5, 'alternating': False, 'sign': 1}}),
  ('F3',
   {'letter': 'p',
    'jacobi': [-0.5, -0.5, 0.0],
    'sigma': [1.0, 0.0],
    'shift': [1.0, 0.0],
    'lattice': 'odd',
    'reflected': False,
    'weight': '1',
    'first_point': 0,
    'first_eigen': 0,
    'mass': {'coef': 2.0, 'pi': 1.0, 'k': -1.0, 'K': -1.0, 'index': 0, 'nome': 1, 'sign': 1, 'damping': -1, 'zero_scale': 1.0},
    'generating': {'parity': 'even', 'alternating': True, 'numerator': 'cos', 'denominator': ['cn']},
    'asymptotic': {'factorial': 'even', 'trig': 'cos', 'root': 0, 'power': 0.5, 'coef': 1.0, 'kprime': 0.0, 'alternating': True, 'sign': 1}}),
  ('F4',
   {'letter': 'q',
    'jacobi': [0.5, 0.5, 0.0],
    'sigma': [1.0, 2.0],
    'shift': [1.0, 4.0],
    'lattice': 'odd',
    'reflected': False,
    'weight': 'x',
    'first_point': 0,
    'first_eigen': 0,
    'mass': {'coef': 2.0, 'pi': 1.0, 'k': -1.0, 'K': -1.0, 'index': 0, 'nome': 1, 'sign': 1, 'damping': -1, 'zero_scale': 1.0},
    'generating': {'parity': 'odd', 'alternating': True, 'numerator': 'sin', 'denominator': ['dn']},
    'asymptotic': {'factorial': 'odd', 'trig': 'cos', 'root': 0, 'power': 1.5, 'coef': 0.5, 'kprime': -1.0, 'alternating': True, 'sign': 1}}),
  ('F5',
   {'letter': 'r',
    'jacobi': [-0.5, -0.5, 0.0],
    'sigma': [0.0, 1.0],
    'shift': [0.0, 1.0],
    'lattice': 'even',
    'reflected': False,
    'weight': '1',
    'first_point': 0,
    'first_eigen': 0,
    'mass': {'coef': 2.0, 'pi': 1.0, 'k': 0.0, 'K': -1.0, 'index': 0, 'nome': 1, 'sign': 1, 'damping': -1, 'zero_scale': 0.5},
    'generating': {'parity': 'even', 'alternating': True, 'numerator': 'cos', 'denominator': ['dn']},
    'asymptotic': {'factorial': 'even', 'trig': 'sin', 'root': 1, 'power': 1.5, 'coef': 0.5, 'kprime': -1.0, 'alternating': True, 'sign': -1}}),
  ('F6',
   {'letter': 's',
    'jacobi': [0.5, 0.5, 0.0],
    'sigma': [2.0, 1.0],
    'shift': [4.0, 1.0],
    'lattice': 'even',
    'reflected': False,
    'weight': 'x/k2',
    'first_point': 0,
    'first_eigen': 1,
    'mass': {'coef': 2.0, 'pi': 1.0, 'k': 0.0, 'K': -1.0, 'index': 0, 'nome': 1, 'sign': 1, 'damping': -1, 'zero_scale': 0.5},
    'generating': {'parity': 'odd', 'alternating': True, 'numerator': 'sin', 'denominator': ['cn']},
    'asymptotic': {'factorial': 'odd', 'trig': 'sin', 'root': -1, 'power': 0.5, 'coef': 1.0, 'kprime': 0.0, 'alternating': True, 'sign': 1}})])

OPERATORS = OrderedDict([('p',
   {'family': 'F3',
    'weight': [-0.5, -0.5, 0.0],
    'xi': -0.5,
    'eta': 1.5,
    'm_start': 0,
    'eigenvalue': {'coef': 4.0, 'pi': 0.5, 'k': -1.0, 'K': 0.0, 'index': 0, 'nome': 1, 'sign': 1, 'damping': -1, 'zero_scale': 1.0},
    'norm': {'coef': 0.5, 'pi': -1.0, 'k': 1.0, 'K': 1.0, 'index': 0, 'nome': -1, 'sign': 1, 'damping': 1, 'zero_scale': 1.0},
    'multiplier': {'kind': 'cn', 'coef': 4.0, 'pi': -0.5}}),
  ('q',
   {'family': 'F4',
    'weight': [0.5, 0.5, 0.0],
    'xi': 0.5,
    'eta': 2.5,
    'm_start': 0,
    'eigenvalue': {'coef': 2.0, 'pi': 0.5, 'k': -1.0, 'K': 0.0, 'index': 0, 'nome': 1, 'sign': 1, 'damping': -1, 'zero_scale': 1.0},
    'norm': {'coef': 2.0, 'pi': -3.0, 'k': 1.0, 'K': 3.0, 'index': -2, 'nome': -1, 'sign': 1, 'damping': 1, 'zero_scale': 1.0},
    'multiplier': {'kind': 'cn', 'coef': 2.0, 'pi': -0.5}}),
  ('r',
   {'family': 'F5',
    'weight': [-0.5, -0.5, 0.0],
    'xi': -0.5,
    'eta': 1.5,
    'm_start': 0,
    'eigenvalue': {'coef': 2.0, 'pi': 0.5, 'k': 0.0, 'K': 0.0, 'index': 0, 'nome': 1, 'sign': 1, 'damping': -1, 'zero_scale': 1.0},
    'norm': {'coef': 0.5, 'pi': -1.0, 'k': 0.0, 'K': 1.0, 'index': 0, 'nome': -1, 'sign': 1, 'damping': 1, 'zero_scale': 2.0},
    'multiplier': {'kind': 'dn', 'coef': 2.0, 'pi': -0.5}}),
  ('s',
   {'family': 'F6',
    'weight': [0.5, 0.5, 0.0],
    'xi': 0.5,
    'eta': 2.5,
    'm_start': 1,
    'eigenvalue': {'coef': 4.0, 'pi': 0.5, 'k': -2.0, 'K': 0.0, 'index': 0, 'nome': 1, 'sign': 1, 'damping': -1, 'zero_scale': 1.0},
    'norm': {'coef': 0.5, 'pi': -3.0, 'k': 2.0, 'K': 3.0, 'index': -2, 'nome': -1, 'sign': 1, 'damping': 1, 'zero_scale': 1.0},
    'multiplier': {'kind': 'dn_boundary', 'coef': 4.0, 'pi': -0.5}}),
  ('f',
   {'family': 'F1',
    'weight': [0.0, 0.5, -0.5],
    'xi': 0.0,
    'eta': 2.0,
    'm_start': 0,
    'eigenvalue': {'coef': 4.0, 'pi': 0.0, 'k': -1.0, 'K': 0.0, 'index': 0, 'nome': 1, 'sign': 1, 'damping': -1, 'zero_scale': 1.0},
    'norm': {'coef': 1.0, 'pi': -2.0, 'k': 1.0, 'K': 2.0, 'index': -1, 'nome': -1, 'sign': -1, 'damping': 1, 'zero_scale': 1.0},
    'multiplier': {'kind': 'cn', 'coef': 4.0, 'pi': -1.0}}),
  ('g',
   {'family': 'F2',
    'weight': [1.0, 0.5, 0.5],
    'xi': 1.0,
    'eta': 3.0,
    'm_start': 1,
    'eigenvalue': {'coef': 8.0, 'pi': 0.0, 'k': -2.0, 'K': 0.0, 'index': 0, 'nome': 1, 'sign': 1, 'damping': -1, 'zero_scale': 1.0},
    'norm': {'coef': 1.0, 'pi': -4.0, 'k': 2.0, 'K': 4.0, 'index': -3, 'nome': -1, 'sign': -1, 'damping': 1, 'zero_scale': 1.0},
    'multiplier': {'kind': 'dn_boundary', 'coef': 8.0, 'pi': -1.0}}),
  ("q'",
   {'family': 'F4',
    'weight': [0.0, 0.5, 0.5],
    'xi': 0.0,
    'eta': 3.0,
    'm_start': 0,
    'eigenvalue': {'coef': 2.0, 'pi': 1.0, 'k': -1.0, 'K': -1.0, 'index': 1, 'nome': 1, 'sign': -1, 'damping': -1, 'zero_scale': 1.0},
    'norm': {'coef': 2.0, 'pi': -3.0, 'k': 1.0, 'K': 3.0, 'index': -2, 'nome': -1, 'sign': 1, 'damping': 1, 'zero_scale': 1.0},
    'multiplier': {'kind': 'sn_cubic', 'coef': 4.0, 'pi': -1.0}}),
  ("s'",
   {'family': 'F6',
    'weight': [0.0, 0.5, 0.5],
    'xi': 0.0,
    'eta': 3.0,
    'm_start': 1,
    'eigenvalue': {'coef': 4.0, 'pi': 1.0, 'k': -2.0, 'K': -1.0, 'index': 1, 'nome': 1, 'sign': -1, 'damping': -1, 'zero_scale': 1.0},
    'norm': {'coef': 0.5, 'pi': -3.0, 'k': 2.0, 'K': 3.0, 'index': -2, 'nome': -1, 'sign': 1, 'damping': 1, 'zero_scale': 1.0},
    'multiplier': {'kind': 'sn2_boundary', 'coef': 4.0, 'pi': -1.0}}),
  ("f'",
   {'family': 'F1',
    'weight': [0.5, 0.0, -0.5],
    'xi': 0.5,
    'eta': 1.5,
    'm_start': 0,
    'eigenvalue': {'coef': 4.0, 'pi': -0.5, 'k': -1.0, 'K': 1.0, 'index': -1, 'nome': 1, 'sign': -1, 'damping': -1, 'zero_scale': 1.0},
    'norm': {'coef': 1.0, 'pi': -2.0, 'k': 1.0, 'K': 2.0, 'index': -1, 'nome': -1, 'sign': -1, 'damping': 1, 'zero_scale': 1.0},
    'multiplier': {'kind': 'sn', 'coef': 2.0, 'pi': -0.5}}),
  ("f''",
   {'family': 'F1',
    'weight': [-0.5, 0.0, 0.5],
    'xi': -0.5,
    'eta': 2.5,
    'm_start': 0,
    'eigenvalue': {'coef': 2.0, 'pi': 1.5, 'k': -1.0, 'K': -1.0, 'index': 1, 'nome': 1, 'sign': -1, 'damping': -1, 'zero_scale': 1.0},
    'norm': {'coef': 1.0, 'pi': -2.0, 'k': 1.0, 'K': 2.0, 'index': -1, 'nome': -1, 'sign': -1, 'damping': 1, 'zero_scale': 1.0},
    'multiplier': {'kind': 'sn_boundary', 'coef': 4.0, 'pi': -0.5}}),
  ("g'",
   {'family': 'F2',
    'weight': [0.5, 0.5, 1.0],
    'xi': 0.5,
    'eta': 3.5,
    'm_start': 1,
    'eigenvalue': {'coef': 2.0, 'pi': 1.5, 'k': -2.0, 'K': -1.0, 'index': 1, 'nome': 1, 'sign': -1, 'damping': -1, 'zero_scale': 1.0},
    'norm': {'coef': 1.0, 'pi': -4.0, 'k': 2.0, 'K': 4.0, 'index': -3, 'nome': -1, 'sign': -1, 'damping': 1, 'zero_scale': 1.0},
    'multiplier': {'kind': 'sn2_boundary', 'coef': 2.0, 'pi': -0.5}})])

TAG_ALIASES = {'f': 'f',
 "f'": "f'",
 "f''": "f''",
 'fp': "f'",
 'fpp': "f''",
 'g': 'g',
 "g'": "g'",
 'gp': "g'",
 'p': 'p',
 'q': 'q',
 "q'": "q'",
 'qp': "q'",
 'r': 'r',
 's': 's',
 "s'": "s'",
 'sp': "s'"}
