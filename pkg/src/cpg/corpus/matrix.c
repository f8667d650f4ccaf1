/* 2x2 and 3-vector arithmetic on small structs. */

struct Mat2 {
    int a;
    int b;
    int c;
    int d;
};

struct Vec3 {
    int x;
    int y;
    int z;
};

void mat2_identity(struct Mat2 *m) {
    m->a = 1;
    m->b = 0;
    m->c = 0;
    m->d = 1;
}

void mat2_mul(struct Mat2 *out, struct Mat2 *l, struct Mat2 *r) {
    int a = l->a * r->a + l->b * r->c;
    int b = l->a * r->b + l->b * r->d;
    int c = l->c * r->a + l->d * r->c;
    int d = l->c * r->b + l->d * r->d;
    out->a = a;
    out->b = b;
    out->c = c;
    out->d = d;
}

int mat2_det(struct Mat2 *m) {
    return m->a * m->d - m->b * m->c;
}

void mat2_pow(struct Mat2 *out, struct Mat2 *m, int n) {
    struct Mat2 base;
    base.a = m->a;
    base.b = m->b;
    base.c = m->c;
    base.d = m->d;
    mat2_identity(out);
    while (n > 0) {
        if (n % 2 == 1) {
            mat2_mul(out, out, &base);
        }
        mat2_mul(&base, &base, &base);
        n = n / 2;
    }
}

int fib_matrix(int n) {
    struct Mat2 m;
    struct Mat2 r;
    m.a = 1;
    m.b = 1;
    m.c = 1;
    m.d = 0;
    mat2_pow(&r, &m, n);
    return r.b;
}

int vec3_dot(struct Vec3 *u, struct Vec3 *v) {
    return u->x * v->x + u->y * v->y + u->z * v->z;
}

void vec3_cross(struct Vec3 *out, struct Vec3 *u, struct Vec3 *v) {
    int x = u->y * v->z - u->z * v->y;
    int y = u->z * v->x - u->x * v->z;
    int z = u->x * v->y - u->y * v->x;
    out->x = x;
    out->y = y;
    out->z = z;
}

void vec3_scale(struct Vec3 *v, int k) {
    v->x = v->x * k;
    v->y = v->y * k;
    v->z = v->z * k;
}

int vec3_manhattan(struct Vec3 *v) {
    int sum = 0;
    sum = sum + (v->x < 0 ? -v->x : v->x);
    sum = sum + (v->y < 0 ? -v->y : v->y);
    sum = sum + (v->z < 0 ? -v->z : v->z);
    return sum;
}

int orthogonal(struct Vec3 *u, struct Vec3 *v) {
    return vec3_dot(u, v) == 0;
}
