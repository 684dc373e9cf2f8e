#include "qparity/device_tables.hpp"

namespace qparity {

// Device parameters and setup. Blank cells are unmeasured. S6 hosts six
// identical qubits; the row carries the typical data (from S6-Q1). S8 is the
// flip-chip sample; its cap column is the cap edge length in um.
const std::string& builtin_table1_tsv() {
  static const std::string t =
      "device_id\tL_um\tW_um\td_um\tej_ghz\tec_ghz\tej_over_ec\tomega_max_ghz\tomega_min_ghz\tg_mhz\tfr_ghz\tt1_us\ttphi_us\ttp_s\tholder\tcap_um\tcr110\tfigures\n"
      "S1-Q1\t80\t35\t5\t4.67\t1.40\t3.34\t6.833\t4.473\t24.3\t5.556\t24.4\t22.8\t1.918\t\t\t\t2, 4\n"
      "S1-Q2\t80\t35\t10\t4.27\t1.48\t2.89\t6.954\t4.135\t20.4\t5.607\t29.4\t13.4\t1.235\t\t\t\t3d~g\n"
      "S1-Q3\t80\t35\t15\t4.45\t1.52\t2.93\t7.191\t4.289\t22.5\t5.712\t16.7\t14.1\t1.159\tAl\tno\tyes\tS5a\n"
      "S1-Q4\t80\t35\t20\t4.63\t1.53\t3.03\t7.268\t4.469\t23.3\t5.753\t25.8\t20.9\t0.987\t\t\t\tS7~9\n"
      "S1-Q5\t80\t35\t25\t4.52\t1.54\t2.94\t7.255\t4.364\t22.6\t5.830\t22.0\t22.3\t1.172\t\t\t\tS18\n"
      "S1-Q6\t80\t35\t30\t4.59\t1.54\t2.98\t7.325\t4.414\t22.7\t5.883\t23.8\t3.0\t0.761\t\t\t\tS21~23\n"
      "S2-Q1\t80\t35\t35\t\t\t\t\t\t\t5.552\t\t\t0.691\t\t\t\t\n"
      "S2-Q2\t80\t35\t40\t\t\t\t\t\t\t5.610\t\t\t0.531\t\t\t\t\n"
      "S2-Q3\t80\t35\t45\t\t\t\t\t\t\t5.713\t\t\t0.541\tCu\tno\tyes\t3d\n"
      "S2-Q4\t80\t35\t50\t\t\t\t\t\t\t5.756\t\t\t0.431\t\t\t\t\n"
      "S2-Q5\t80\t35\t55\t\t\t\t\t\t\t5.831\t\t\t0.320\t\t\t\t\n"
      "S2-Q6\t80\t35\t60\t\t\t\t\t\t\t5.882\t\t\t0.353\t\t\t\t\n"
      "S3-Q1\t80\t35\t20\t3.23\t1.49\t2.17\t6.585\t3.126\t15.7\t5.554\t54.2\t76.9\t1.123\t\t\t\t\n"
      "S3-Q2\t80\t35\t40\t3.36\t1.51\t2.23\t6.729\t3.279\t15.5\t5.609\t42\t400.0\t0.673\t\t\t\t\n"
      "S3-Q3\t80\t35\t80\t3.24\t1.52\t2.13\t6.728\t3.130\t13.2\t5.712\t\t\t0.175\tAl\tno\tyes\t3d\n"
      "S3-Q4\t80\t35\t100\t3.47\t1.51\t2.30\t6.806\t3.386\t14.3\t5.754\t\t\t0.244\t\t\t\tS4b\n"
      "S3-Q5\t80\t35\t200\t\t\t\t\t\t\t5.833\t\t\t0.164\t\t\t\t\n"
      "S3-Q6\t80\t35\t400\t\t\t\t\t\t\t5.885\t\t\t0.251\t\t\t\t\n"
      "S4-Q1\t80\t35\t5\t7.61\t1.30\t5.87\t7.845\t6.754\t46.5\t5.521\t\t\t2.268\t\t\t\t\n"
      "S4-Q2\t220\t35\t5\t6.92\t0.78\t8.89\t5.774\t5.505\t4.7\t5.581\t\t\t0.074\t\t\t\t\n"
      "S4-Q3\t240\t60\t5\t12.25\t0.44\t28.09\t6.068\t6.067\t\t5.634\t4.4\t7.2\t0.030\tAl\tno\tyes\t3c\n"
      "S4-Q4\t300\t60\t5\t15.31\t0.40\t38.66\t6.5402\t6.5401\t\t5.700\t12.3\t14.0\t0.016\t\t\t\tS5b,d\n"
      "S4-Q5\t350\t90\t5\t\t\t\t\t\t\t5.756\t\t\t\t\t\t\tS23\n"
      "S4-Q6\t420\t100\t5\t\t\t\t6.2184\t6.2184\t\t5.800\t\t\t\t\t\t\t\n"
      "S5-Q1\t80\t35\t5\t6.25\t1.31\t4.77\t7.246\t5.740\t50.0\t5.515\t\t\t0.610\t\t\t\t\n"
      "S5-Q2\t220\t35\t5\t5.12\t0.76\t6.73\t4.907\t4.400\t119.1\t5.596\t\t\t0.046\t\t\t\t3c\n"
      "S5-Q3\t240\t60\t5\t14.66\t0.37\t39.62\t6.2013\t6.2012\t\t5.628\t\t\t0.022\tAl\tno\tyes\t4\n"
      "S5-Q4\t300\t60\t5\t11.99\t0.43\t27.88\t5.9853\t5.984\t\t5.695\t8.6\t45.7\t0.011\t\t\t\tS5d\n"
      "S5-Q5\t350\t90\t5\t\t\t\t6.061\t6.061\t\t5.752\t13.1\t28.3\t\t\t\t\tS23\n"
      "S5-Q6\t420\t100\t5\t\t\t\t5.8345\t5.8345\t\t5.799\t16.1\t22.6\t\t\t\t\t\n"
      "S6-Q1\t80\t35\t20\t3.50\t1.40\t2.50\t6.558\t3.257\t16.1\t5.703\t5\t9\t0.374\tAl\tno\tno\tS4a;S20\n"
      "S7-Q1\t80\t35\t20\t2.79\t1.43\t1.95\t6.214\t2.774\t11.25\t5.556\t\t\t0.940\t\t\t\t\n"
      "S7-Q2\t80\t35\t40\t\t\t\t\t\t\t\t\t\t0.610\t\t\t\t\n"
      "S7-Q3\t80\t35\t80\t\t\t\t\t\t\t\t\t\t0.072\tAl\tno\tno\tS4b\n"
      "S7-Q4\t80\t35\t100\t\t\t\t\t\t\t\t\t\t0.074\t\t\t\t\n"
      "S7-Q5\t80\t35\t200\t\t\t\t\t\t\t\t\t\t0.089\t\t\t\t\n"
      "S7-Q6\t80\t35\t400\t\t\t\t\t\t\t\t\t\t0.140\t\t\t\t\n"
      "S8-Q2\t80\t35\t5\t2.35\t1.29\t1.82\t5.566\t2.281\t16.9\t4.611\t55.3\t3.1\t2.006\t\t300\t\t\n"
      "S8-Q3\t120\t35\t5\t2.23\t0.95\t2.35\t4.260\t2.230\t12.9\t4.673\t\t\t1.600\t\t300\t\t\n"
      "S8-Q4\t160\t35\t5\t2.43\t0.75\t3.20\t3.650\t2.320\t5.2\t4.702\t\t\t1.006\t\t300\t\t3c\n"
      "S8-Q5\t180\t35\t5\t4.45\t0.66\t6.74\t4.254\t3.858\t19.2\t4.733\t39.2\t\t0.904\tAl\t300\tyes\tS19\n"
      "S8-Q6\t210\t35\t5\t4.71\t0.59\t7.97\t4.104\t3.899\t18.6\t4.770\t\t\t0.615\t\t300\t\tS23\n"
      "S8-Q7\t260\t35\t5\t4.84\t0.49\t9.92\t3.832\t3.712\t18.0\t4.805\t13.8\t25.1\t0.603\t\t500\t\t\n"
      "S8-Q8\t260\t35\t5\t5.79\t0.46\t12.58\t4.116\t4.059\t23.0\t4.835\t35.3\t19.3\t0.655\t\t500\t\t\n"
      "S9-Q1\t80\t35\t20\t\t\t\t\t\t\t5.850\t\t\t0.511\t\t\t\t\n"
      "S9-Q2\t80\t35\t50\t\t\t\t\t\t\t5.800\t\t\t0.249\t\t\t\t\n"
      "S9-Q3\t80\t35\t80\t\t\t\t\t\t\t5.751\t\t\t0.146\tAl\tno\tno\tS5c\n"
      "S9-Q4\t80\t35\t110\t\t\t\t\t\t\t5.750\t\t\t0.196\t\t\t\t\n"
      "S9-Q5\t80\t35\t140\t\t\t\t\t\t\t5.700\t\t\t0.157\t\t\t\t\n"
      "S9-Q6\t80\t35\t170\t\t\t\t\t\t\t5.650\t\t\t0.152\t\t\t\t\n"
      "S10-Q1\t80\t35\t20\t\t\t\t\t\t\t5.850\t\t\t0.652\t\t\t\t\n"
      "S10-Q2\t80\t35\t50\t\t\t\t\t\t\t5.800\t\t\t0.292\t\t\t\t\n"
      "S10-Q3\t80\t35\t80\t\t\t\t\t\t\t5.753\t\t\t0.158\tAl\tno\tno\tS5c\n"
      "S10-Q4\t80\t35\t110\t\t\t\t\t\t\t5.750\t\t\t0.181\t\t\t\t\n"
      "S10-Q6\t80\t35\t170\t\t\t\t\t\t\t5.650\t\t\t0.149\t\t\t\t\n";
  return t;
}

// Fitted qubit parameters: ground-state splitting eps0 and matrix element
// c0^2 computed from E_J, E_C; Gamma_P(0), Delta, x_qp from the
// temperature fits (Delta shared per chip). x_qp column is 1e7 * x_qp.
const std::string& builtin_table2_tsv() {
  static const std::string t =
      "device_id\tL_um\tW_um\td_um\tomega_max_ghz\tomega_min_ghz\tej_ghz\tec_ghz\teps0_ghz\tc0sq\tgp0_hz\tdelta_ghz\txqp_1e7\n"
      "S1-Q1\t80\t35\t5\t6.833\t4.473\t4.67\t1.40\t0.238\t0.775\t0.48\t50.9\t0.22\n"
      "S1-Q2\t80\t35\t10\t6.954\t4.135\t4.27\t1.48\t0.319\t0.755\t0.77\t50.9\t1.94\n"
      "S1-Q4\t80\t35\t20\t7.268\t4.469\t4.63\t1.53\t0.305\t0.762\t0.92\t50.9\t2.28\n"
      "S4-Q1\t80\t35\t5\t7.845\t6.754\t7.61\t1.30\t0.0677\t0.838\t0.57\t52.53\t0.73\n"
      "S4-Q2\t220\t35\t5\t5.774\t5.505\t6.92\t0.78\t0.0117\t0.872\t13.93\t52.53\t3.51\n"
      "S4-Q3\t240\t60\t5\t6.068\t6.067\t12.25\t0.44\t2.18e-5\t0.931\t34.06\t52.53\t5.16\n"
      "S5-Q1\t80\t35\t5\t7.246\t5.740\t6.25\t1.31\t0.112\t0.817\t1.59\t49.50\t0.35\n"
      "S5-Q2\t220\t35\t5\t4.907\t4.400\t5.12\t0.76\t0.027\t0.850\t19.11\t49.50\t3.90\n"
      "S5-Q3\t240\t60\t5\t6.2013\t6.2012\t14.66\t0.37\t1.6e-6\t0.942\t44.12\t49.50\t2.87\n"
      "S8-Q2\t80\t35\t5\t5.566\t2.281\t2.35\t1.29\t0.490\t0.691\t0.42\t48.55\t0.96\n"
      "S8-Q3\t120\t35\t5\t4.260\t2.230\t2.23\t0.95\t0.272\t0.726\t0.63\t48.55\t1.15\n"
      "S8-Q5\t180\t35\t5\t4.254\t3.858\t4.45\t0.66\t0.024\t0.846\t1.10\t48.55\t0.42\n"
      "S8-Q6\t210\t35\t5\t4.104\t3.899\t4.71\t0.59\t0.013\t0.858\t1.60\t48.55\t0.28\n"
      "S8-Q7\t260\t35\t5\t3.832\t3.712\t4.84\t0.49\t0.005\t0.871\t1.60\t48.55\t0.70\n"
      "S8-Q8\t260\t35\t5\t4.116\t4.059\t5.79\t0.46\t0.002\t0.881\t1.60\t48.55\t0.44\n";
  return t;
}

} // namespace qparity
