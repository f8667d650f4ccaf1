/* Integer geometry: points, rectangles and polygons stored as chains. */

struct Point {
    int x;
    int y;
};

struct Rect {
    struct Point lo;
    struct Point hi;
};

struct Vertex {
    struct Point p;
    struct Vertex *next;
};

int point_dist2(struct Point *a, struct Point *b) {
    int dx = a->x - b->x;
    int dy = a->y - b->y;
    return dx * dx + dy * dy;
}

int cross(struct Point *o, struct Point *a, struct Point *b) {
    return (a->x - o->x) * (b->y - o->y) - (a->y - o->y) * (b->x - o->x);
}

int rect_area(struct Rect *r) {
    int w = r->hi.x - r->lo.x;
    int h = r->hi.y - r->lo.y;
    if (w < 0 || h < 0) {
        return 0;
    }
    return w * h;
}

int rect_contains(struct Rect *r, struct Point *p) {
    return p->x >= r->lo.x && p->x <= r->hi.x && p->y >= r->lo.y && p->y <= r->hi.y;
}

int rect_overlap(struct Rect *a, struct Rect *b) {
    if (a->hi.x < b->lo.x || b->hi.x < a->lo.x) {
        return 0;
    }
    if (a->hi.y < b->lo.y || b->hi.y < a->lo.y) {
        return 0;
    }
    return 1;
}

struct Vertex *poly_add(struct Vertex *head, int x, int y) {
    struct Vertex *v = malloc(16);
    v->p.x = x;
    v->p.y = y;
    v->next = head;
    return v;
}

int poly_area2(struct Vertex *head) {
    struct Vertex *v = head;
    struct Vertex *w;
    int sum = 0;
    if (head == NULL) {
        return 0;
    }
    while (v != NULL) {
        w = v->next != NULL ? v->next : head;
        sum = sum + v->p.x * w->p.y - w->p.x * v->p.y;
        v = v->next;
    }
    return sum < 0 ? -sum : sum;
}

int poly_is_convex(struct Vertex *head) {
    struct Vertex *a = head;
    struct Vertex *b;
    struct Vertex *c;
    int sign = 0;
    int turn;
    while (a != NULL) {
        b = a->next != NULL ? a->next : head;
        c = b->next != NULL ? b->next : head;
        turn = cross(&a->p, &b->p, &c->p);
        if (turn != 0) {
            if (sign == 0) {
                sign = turn > 0 ? 1 : -1;
            } else if (sign > 0 && turn < 0 || sign < 0 && turn > 0) {
                return 0;
            }
        }
        a = a->next;
    }
    return 1;
}

int poly_bounds(struct Vertex *head, struct Rect *out) {
    struct Vertex *v = head;
    if (v == NULL) {
        return 0;
    }
    out->lo.x = v->p.x;
    out->lo.y = v->p.y;
    out->hi.x = v->p.x;
    out->hi.y = v->p.y;
    for (v = head->next; v != NULL; v = v->next) {
        if (v->p.x < out->lo.x) out->lo.x = v->p.x;
        if (v->p.y < out->lo.y) out->lo.y = v->p.y;
        if (v->p.x > out->hi.x) out->hi.x = v->p.x;
        if (v->p.y > out->hi.y) out->hi.y = v->p.y;
    }
    return 1;
}
